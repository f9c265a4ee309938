#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "maxpoint/counterexample.hpp"
#include "maxpoint/factorization.hpp"
#include "maxpoint/poset.hpp"

namespace testgen {

using maxpoint::FinitePoset;

std::vector<std::string> labels(std::size_t n, const std::string& prefix = "e");

FinitePoset chain(std::size_t n);
FinitePoset antichain(std::size_t n);

// One representative per isomorphism class of posets on exactly n elements.
// Dedupes with a permutation-minimal canonical matrix, independent of the
// library's isomorphism search.
std::vector<FinitePoset> posets_of_size(std::size_t n);
// All classes on 0..n elements.
std::vector<FinitePoset> posets_up_to(std::size_t n);

// Random order: each pair i < j is a cover candidate with probability p.
FinitePoset random_poset(std::mt19937_64& rng, std::size_t n, double p = 0.3);

// Antichain model "(x,y)" for the given factor sizes, labelled x0.. y0..
maxpoint::ProductModel discrete_model(std::size_t nx, std::size_t ny, std::size_t y0 = 0);

// Antichain model with shuffled labelling, a random base point, chains of
// compact elements below some maximal points and a few elements whose upper
// sets avoid X×{y0}. P stays within the default enumeration bound and Q
// below `max_q` triples.
maxpoint::ProductModel random_model(std::mt19937_64& rng, std::size_t max_q = 20);

// Random valid open of L covering Max(L).
maxpoint::SymbolicOpen random_covering_open(std::mt19937_64& rng, maxpoint::Nat max_threshold = 6);

}  // namespace testgen
