#include "twr/chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "twr/check.hpp"
#include "twr/separation.hpp"

namespace twr {

VertexSet SeparatorChain::set(int i) const {
  if (i == 0) return {};
  if (i == q() + 1) {
    VertexSet all = VertexSet::range(num_vertices);
    all.erase(t);
    return all;
  }
  return sets.at(static_cast<std::size_t>(i - 1));
}

VertexSet SeparatorChain::separator(int i) const {
  if (i == 0) return {s};
  if (i == q() + 1) return {t};
  return boundaries.at(static_cast<std::size_t>(i - 1));
}

namespace {

bool crossing(const VertexSet& x, const VertexSet& y) {
  return !x.is_subset_of(y) && !y.is_subset_of(x);
}

}  // namespace

SeparatorChain build_chain(const Graph& g, Vertex s, Vertex t) {
  if (!g.has_vertex(s) || !g.has_vertex(t) || s == t)
    throw DomainError("terminals must be distinct vertices");
  if (g.has_edge(s, t)) throw DomainError("terminals are adjacent; no separator exists");

  SeparatorChain chain;
  chain.s = s;
  chain.t = t;
  chain.num_vertices = g.num_vertices();
  chain.ell = min_vertex_separator(g, {s}, {t}).size;

  std::vector<VertexSet> family;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (v == s || v == t) continue;
    auto sep = min_separator_containing(g, s, t, v);
    if (!sep) continue;
    VertexSet x = reachable(g, {s}, sep->witness);
    if (std::find(family.begin(), family.end(), x) == family.end()) family.push_back(std::move(x));
  }

  const auto initial = static_cast<long long>(family.size());
  const long long step_guard = std::max<long long>(1, g.num_vertices() * initial * initial);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < family.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < family.size() && !changed; ++j) {
        if (!crossing(family[i], family[j])) continue;
        VertexSet meet = set_intersection(family[i], family[j]);
        VertexSet join = set_union(family[i], family[j]);
        TWR_ASSERT(static_cast<int>(boundary(g, meet).size()) == chain.ell);
        TWR_ASSERT(static_cast<int>(boundary(g, join).size()) == chain.ell);
        TWR_ASSERT(set_union(boundary(g, meet), boundary(g, join)) ==
               set_union(boundary(g, family[i]), boundary(g, family[j])));
        family.erase(family.begin() + static_cast<std::ptrdiff_t>(j));
        family.erase(family.begin() + static_cast<std::ptrdiff_t>(i));
        for (VertexSet* x : {&meet, &join})
          if (std::find(family.begin(), family.end(), *x) == family.end())
            family.push_back(std::move(*x));
        ++chain.uncrossing_steps;
        if (chain.uncrossing_steps > step_guard)
          throw std::logic_error("uncrossing exceeded its step bound");
        changed = true;
      }
    }
  }

  std::sort(family.begin(), family.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (auto& x : family) {
    chain.boundaries.push_back(boundary(g, x));
    chain.sets.push_back(std::move(x));
  }
  return chain;
}

bool validate_chain(const Graph& g, Vertex s, Vertex t, const SeparatorChain& chain,
                    const std::vector<VertexSet>& all_min_separators) {
  if (chain.sets.size() != chain.boundaries.size()) return false;
  VertexSet forbidden = boundary(g, {t});
  forbidden.insert(t);
  VertexSet covered;
  for (int i = 0; i < chain.q(); ++i) {
    const VertexSet& x = chain.sets[static_cast<std::size_t>(i)];
    if (i > 0) {
      const VertexSet& prev = chain.sets[static_cast<std::size_t>(i - 1)];
      if (!(prev.is_subset_of(x) && prev.size() < x.size())) return false;
    }
    if (!x.contains(s) || x.intersects(forbidden)) return false;
    VertexSet delta = boundary(g, x);
    if (delta != chain.boundaries[static_cast<std::size_t>(i)]) return false;
    if (static_cast<int>(delta.size()) != chain.ell) return false;
    covered = set_union(covered, delta);
  }
  for (const auto& sep : all_min_separators)
    if (!sep.is_subset_of(covered)) return false;
  return true;
}

}  // namespace twr
