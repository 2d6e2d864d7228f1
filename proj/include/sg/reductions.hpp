// Copyright 2026 The sgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SG_REDUCTIONS_HPP
#define SG_REDUCTIONS_HPP

// Constructors for the classic hardness gadgets, used as test-instance
// generators. Each constructor validates its output before returning.

#include <utility>
#include <vector>

#include "sg/game.hpp"

namespace sg {

/// An instance of the number-partitioning problem: positive weights.
struct PartitionInstance {
  std::vector<BigInt> weights;
};

/// Simple undirected graph on vertices 1..vertex_count, no self-loops.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // normalized (a < b), sorted

  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);
};

/// Embeds a partition instance with even total 2t into a two-component
/// weighted conjunction on k + 4 players: quota 10 + 20t against weights
/// (20a_1, ..., 20a_k, 10, 9, 1, 0) and (20a_1, ..., 20a_k, 9, 10, 0, 1).
/// The game is non-linear exactly when an equal-sum bipartition exists.
/// Rejects odd totals.
MultiWeightedForm partition_to_mwvg(const PartitionInstance& instance);

/// The standard 4-player non-linear conjunction
/// [10; 10, 9, 1, 0] and [10; 9, 10, 0, 1]: players 1 and 2 incomparable.
MultiWeightedForm example_5_2();

/// The game whose minimal winning coalitions are the graph's edges.
/// Losing coalitions correspond to independent sets, so the winning count
/// complements the vertex-cover count. Requires at least one edge.
MinimalWinningForm graph_to_minimal_form(const Graph& graph);

/// Exact number of vertex covers, by enumeration.
BigInt count_vertex_covers(const Graph& graph, int n_cap = kDefaultEnumCap);

/// Adds player n+1 to every minimal winning coalition. The new player's
/// Banzhaf value equals the input game's number of winning coalitions.
MinimalWinningForm augment_with_pivot(const MinimalWinningForm& form);

/// Appends a zero-weight player; its Chow parameter equals the input
/// game's number of winning coalitions.
WeightedForm zero_weight_extension(const WeightedForm& game);

}  // namespace sg

#endif  // SG_REDUCTIONS_HPP
