#include "maxpoint/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "maxpoint/counterexample.hpp"
#include "maxpoint/factorization.hpp"
#include "maxpoint/ideal.hpp"
#include "maxpoint/model_io.hpp"
#include "maxpoint/poset_io.hpp"
#include "maxpoint/scott.hpp"
#include "maxpoint/symbolic_io.hpp"

namespace maxpoint::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Flags {
  std::string input;
  std::string y0;
  std::string mode = "L";
  Nat width = 2;
  Nat depth = 2;
  std::size_t max_elements = EnumerationLimits{}.max_elements;
  Nat eval_bound = 50;
  std::string dot;
};

EnumerationLimits limits_of(const Flags& f) { return EnumerationLimits{f.max_elements}; }

void line(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << ": " << value << '\n';
}

void write_dot_file(const std::string& path, const FinitePoset& p, const std::string& name) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write " + path);
  write_dot(file, p, name);
}

int finish(const Report& rep, std::ostream& out) {
  rep.write(out);
  return rep.all_ok() ? kOk : kFailed;
}

int cmd_check(const Flags& f, std::ostream& out) {
  const auto p = load_poset(f.input);
  const ScottOptions scott{CheckPath::Auto, limits_of(f)};
  line(out, "elements", std::to_string(p.size()));
  line(out, "dcpo", yes_no(is_dcpo(p)));
  line(out, "continuous", yes_no(is_continuous(p, scott)));
  line(out, "algebraic", yes_no(is_algebraic(p, scott)));
  line(out, "ideal domain", yes_no(is_ideal_domain(p, scott)));
  line(out, "bounded complete", yes_no(is_bounded_complete(p)));
  line(out, "|Max|", std::to_string(maximal_elements(p).size()));
  line(out, "Max", format_set(p, maximal_elements(p)));
  line(out, "K", format_set(p, compact_elements(p, scott)));
  return kOk;
}

int cmd_topology(const Flags& f, std::ostream& out) {
  const auto p = load_poset(f.input);
  const auto t = scott_opens(p, limits_of(f));
  line(out, "elements", std::to_string(p.size()));
  line(out, "|σ(P)|", std::to_string(t.opens().size()));
  for (auto u : t.opens()) line(out, "open", t.format(u));
  const auto why = t.violation();
  line(out, "topology", why ? "FAILED (" + *why + ")" : "VERIFIED");
  return why ? kFailed : kOk;
}

int cmd_maxspace(const Flags& f, std::ostream& out) {
  const auto p = load_poset(f.input);
  const auto max = maximal_elements(p);
  const auto rel = relative_topology(p, max, limits_of(f));
  const auto sigma = scott_opens(p, limits_of(f));
  PointMask max_mask = 0;
  for (auto i : max.indices()) max_mask |= point_bit(i);
  line(out, "Max(P)", format_set(p, max));
  line(out, "|opens|", std::to_string(rel.opens().size()));
  for (auto u : rel.opens()) line(out, "open", rel.format(u));
  line(out, "T1", yes_no(rel.is_t1()));
  line(out, "discrete", yes_no(rel.is_discrete()));
  const bool gdelta = is_gdelta(sigma, max_mask);
  line(out, "Max(P) G-delta in σ(P)", gdelta ? "VERIFIED" : "FAILED");
  return gdelta ? kOk : kFailed;
}

int cmd_idl(const Flags& f, std::ostream& out) {
  const auto p = load_poset(f.input);
  const auto model = algebraic_model(p, limits_of(f));
  const auto& idl = model.completion.poset;
  line(out, "|Idl(P)|", std::to_string(idl.size()));
  for (std::size_t i = 0; i < idl.size(); ++i) line(out, "ideal", idl.label(i));
  for (const auto& [lo, hi] : idl.cover_pairs()) line(out, "cover", idl.label(lo) + " < " + idl.label(hi));
  line(out, "Idl(P) ≅ P", yes_no(order_isomorphic(idl, p)));
  if (!f.dot.empty()) write_dot_file(f.dot, idl, "idl");
  return finish(model.report, out);
}

ProductModel load_model_with_y0(const Flags& f) {
  const ModelOptions opts{limits_of(f)};
  auto m = load_model(f.input, opts);
  if (!f.y0.empty()) return m.with_y0(f.y0);
  return m;
}

int cmd_factor(const Flags& f, std::ostream& out) {
  const ModelOptions opts{limits_of(f)};
  const auto m = load_model_with_y0(f);
  QPoset q;
  try {
    q = build_Q(m, opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CycleDetected && e.code() != ErrorCode::NotAPartialOrder) throw;
    line(out, "claim 1 (⊑ is a partial order on Q)", "FAILED (" + e.detail() + ")");
    return kFailed;
  }
  const auto r = verify_factorization(m, std::move(q), opts);
  return finish(r.report, out);
}

int cmd_lower_model(const Flags& f, std::ostream& out) {
  const ModelOptions opts{limits_of(f)};
  const auto m = load_model(f.input, opts);
  const auto y = f.y0.empty() ? m.y0_label() : f.y0;
  return finish(lower_set_model(m, y, opts).report, out);
}

int cmd_diagonal(const Flags& f, std::ostream& out) {
  const auto family = OpenFamily::finite(load_family(f.input));
  const auto w = diagonal_witness(family);
  line(out, "φ", w.phi.str());
  return finish(w.certificate, out);
}

int cmd_lhat_cert(const Flags& f, std::ostream& out) { return finish(gdelta_certificate_lhat(f.eval_bound), out); }

Space space_of(const std::string& mode) {
  if (mode == "L") return Space::L;
  if (mode == "Lhat") return Space::LHat;
  throw Error(ErrorCode::ParseError, "mode must be L or Lhat");
}

int cmd_truncate(const Flags& f, std::ostream& out) {
  const auto t = truncate_L(f.width, f.depth, space_of(f.mode));
  out << poset_to_json(t.poset).dump(2) << '\n';
  if (!f.dot.empty()) write_dot_file(f.dot, t.poset, "truncation");
  return kOk;
}

int cmd_hasse(const Flags& f, std::ostream& out) {
  const auto p = load_poset(f.input);
  if (f.dot.empty()) {
    write_dot(out, p);
  } else {
    write_dot_file(f.dot, p, "poset");
    line(out, "wrote", f.dot);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite domain theory checks and maximal point space models", "maxpoint"};
  app.require_subcommand(1);
  Flags f;

  using Handler = std::function<int(const Flags&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const std::string& name, const std::string& about, Handler h) {
    auto* sub = app.add_subcommand(name, about);
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto needs_input = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("--input", f.input, what)->required()->check(CLI::ExistingFile);
  };
  auto bound = [&](CLI::App* sub) {
    sub->add_option("--max-elements", f.max_elements, "Bound for exhaustive enumeration")->capture_default_str();
  };

  auto* check = add("check", "Classify a poset", cmd_check);
  needs_input(check, "Poset file");
  bound(check);

  auto* topology = add("topology", "List the Scott opens of a poset", cmd_topology);
  needs_input(topology, "Poset file");
  bound(topology);

  auto* maxspace = add("maxspace", "Relative topology on the maximal points", cmd_maxspace);
  needs_input(maxspace, "Poset file");
  bound(maxspace);

  auto* idl = add("idl", "Ideal completion of a poset", cmd_idl);
  needs_input(idl, "Poset file");
  bound(idl);
  idl->add_option("--dot", f.dot, "Write the completion as DOT");

  auto* factor = add("factor", "Build and verify the factor space model", cmd_factor);
  needs_input(factor, "Product model file");
  factor->add_option("--y0", f.y0, "Base point in Y (overrides the file)");
  bound(factor);

  auto* lower = add("lower-model", "Lower closure of a slice X×{y}", cmd_lower_model);
  needs_input(lower, "Product model file");
  lower->add_option("--y0", f.y0, "Slice coordinate in Y (defaults to the file's y0)");
  bound(lower);

  auto* diagonal = add("diagonal", "Diagonal witness against a family of opens of L", cmd_diagonal);
  needs_input(diagonal, "Family file");

  auto* lhat = add("lhat-cert", "Certificate that Max(L̂) is a G-delta set", cmd_lhat_cert);
  lhat->add_option("--eval-bound", f.eval_bound, "Largest index checked point-wise")->capture_default_str();

  auto* trunc = add("truncate-l", "Finite truncation of L or L̂ as a poset file", cmd_truncate);
  trunc->add_option("--width", f.width, "Number of chains")->capture_default_str()->check(CLI::PositiveNumber);
  trunc->add_option("--depth", f.depth, "Finite points per chain")->capture_default_str()->check(CLI::PositiveNumber);
  trunc->add_option("--mode", f.mode, "L or Lhat")->capture_default_str()->check(CLI::IsMember({"L", "Lhat"}));
  trunc->add_option("--dot", f.dot, "Also write DOT");

  auto* hasse = add("hasse", "Hasse diagram as DOT", cmd_hasse);
  needs_input(hasse, "Poset file");
  hasse->add_option("--dot", f.dot, "Output path (stdout when absent)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const auto& entry : commands) {
      if (entry.first->parsed()) {
        out << entry.first->help();
        return kOk;
      }
    }
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ParseError: " << e.what() << '\n';
    return kBadInput;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      return handler(f, out);
    } catch (const Error& e) {
      err << e.what() << '\n';
      return is_verification_error(e.code()) ? kFailed : kBadInput;
    } catch (const nlohmann::json::exception& e) {
      err << "ParseError: " << e.what() << '\n';
      return kBadInput;
    }
  }
  return kBadInput;
}

}  // namespace maxpoint::cli
