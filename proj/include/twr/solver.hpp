#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "twr/classes.hpp"
#include "twr/graph.hpp"
#include "twr/treedecomp.hpp"

namespace twr {

using TerminalPair = std::pair<Vertex, Vertex>;

struct CutConstraints {
  std::vector<TerminalPair> cut_pairs;    // must end up in different components
  std::vector<TerminalPair> uncut_pairs;  // must stay in one component

  /// All pair endpoints.
  VertexSet terminals() const;
};

struct DpStats {
  std::int64_t total_states = 0;
  std::int64_t peak_table = 0;
};

struct DPWitness {
  VertexSet deletion_set;
  Graph induced_graph;
  DpStats stats;
};

struct DpOptions {
  // Drop states whose deleted graph already left the class. With this off the
  // class is only tested at the root.
  bool prune_heredity = true;
};

/// Searches for S with |S| <= k avoiding terminals and `undeletable`, G[S] in
/// `cls`, every cut pair separated and every uncut pair connected in G - S.
/// Throws DomainError when `nice` is not a nice decomposition of `g`.
std::optional<DPWitness> dp_constrained_cut(const Graph& g, const NiceDecomposition& nice,
                                            const CutConstraints& cons, int k,
                                            const HereditaryClass& cls,
                                            const VertexSet& undeletable = {},
                                            const DpOptions& options = {});

/// True when `s` satisfies every constraint of the problem on `g`.
bool verify_constrained_cut(const Graph& g, const CutConstraints& cons, int k,
                            const HereditaryClass& cls, const VertexSet& s);

/// Figures gathered while running the reduction pipeline.
struct PipelineReport {
  int ell = -1;  // -1: terminals adjacent or no pair measured
  int excess = -1;
  int cover_size = 0;
  int reduced_vertices = 0;
  int width = -1;
  std::int64_t width_bound = 0;
  DpStats dp;
};

std::optional<DPWitness> g_mincut(const Graph& g, Vertex s, Vertex t, int k,
                                  const HereditaryClass& cls, PipelineReport* report = nullptr,
                                  const DpOptions& options = {});

std::optional<DPWitness> g_multicut_uncut(const Graph& g, const CutConstraints& cons, int k,
                                          const HereditaryClass& cls,
                                          PipelineReport* report = nullptr,
                                          const DpOptions& options = {});

}  // namespace twr
