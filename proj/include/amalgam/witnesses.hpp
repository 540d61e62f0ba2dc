#pragma once

// Finitary instability witnesses: maximum half-graph order and maximum
// shattered edge-free set. Both searches re-verify their witness against the
// definitions before returning.

#include <map>
#include <vector>

#include "amalgam/graph.hpp"

namespace amalgam {

struct HalfGraphWitness {
    std::vector<int> a_seq;
    std::vector<int> b_seq;
};

// edge(a_i, b_j) iff i < j over all index pairs; all 2k vertices distinct.
bool verify_half_graph(const Graph& g, const HalfGraphWitness& w);

struct HalfGraphResult {
    int order = 0;
    HalfGraphWitness witness;
};
// Largest k <= k_cap admitting a witness; lockstep backtracking (a_t then b_t)
// with candidate-set pruning, lowest-index tie-breaks.
HalfGraphResult max_half_graph(const Graph& g, int k_cap);

struct ShatterWitness {
    std::vector<int> base;                        // edge-free set I
    std::map<std::vector<int>, int> realizers;    // sorted subset of I -> realizing vertex
};

bool verify_shatter(const Graph& g, const ShatterWitness& w);

struct ShatterResult {
    int size = 0;
    ShatterWitness witness;
};
// Largest edge-free I with |I| <= k_cap such that every subset of I is the
// exact neighborhood trace of some vertex. 2^|I| realizers are required, so
// k_cap is expected to stay <= ~4.
ShatterResult max_shattered_set(const Graph& g, int k_cap);

}  // namespace amalgam
