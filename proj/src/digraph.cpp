#include "tropfrac/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tropfrac {

WeightedDigraph WeightedDigraph::of_matrix(const TropMatrix& E) {
  if (E.rows() != E.cols()) throw DimensionMismatch("digraph of a non-square matrix");
  WeightedDigraph D(E.rows());
  for (std::size_t i = 0; i < E.rows(); ++i)
    for (std::size_t j = 0; j < E.cols(); ++j)
      if (E(i, j).is_finite()) D.add_arc(i, j, E(i, j).value());
  return D;
}

void WeightedDigraph::add_arc(std::size_t source, std::size_t target, Rational weight) {
  if (source >= size() || target >= size()) throw std::invalid_argument("arc endpoint out of range");
  for (std::size_t a : out_[source])
    if (arcs_[a].target == target) throw std::invalid_argument("duplicate arc");
  out_[source].push_back(arcs_.size());
  arcs_.push_back({source, target, std::move(weight)});
}

SccDecomposition strongly_connected_components(const WeightedDigraph& D) {
  // Iterative Tarjan.
  const std::size_t n = D.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, none), low(n, 0), comp(n, none), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> call;  // node, next out position
  SccDecomposition out;
  std::size_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != none) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos == 0 && index[v] == none) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      const auto& outs = D.out(v);
      if (pos < outs.size()) {
        std::size_t w = D.arcs()[outs[pos++]].target;
        if (index[w] == none) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> members;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = out.members.size();
          members.push_back(w);
        } while (w != v);
        std::sort(members.begin(), members.end());
        out.members.push_back(std::move(members));
      }
      std::size_t finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }
  out.component = std::move(comp);
  return out;
}

std::vector<char> reachable_from(const WeightedDigraph& D, std::size_t start) {
  std::vector<char> seen(D.size(), 0);
  if (start >= D.size()) throw std::out_of_range("reachable_from: bad start node");
  std::vector<std::size_t> todo{start};
  seen[start] = 1;
  while (!todo.empty()) {
    std::size_t v = todo.back();
    todo.pop_back();
    for (std::size_t a : D.out(v)) {
      std::size_t w = D.arcs()[a].target;
      if (!seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

SccAccess scc_and_access(const WeightedDigraph& D, std::size_t query) {
  return {strongly_connected_components(D), reachable_from(D, query)};
}

namespace {

// Karp on one strongly connected component, maximal mean.
std::optional<Rational> karp_max(const WeightedDigraph& D, const std::vector<std::size_t>& members,
                                 const std::vector<std::size_t>& comp, std::size_t c, bool negate) {
  const std::size_t s = members.size();
  std::vector<std::size_t> local(D.size(), 0);
  for (std::size_t k = 0; k < s; ++k) local[members[k]] = k;

  struct LocalArc {
    std::size_t u, v;
    Rational w;
  };
  std::vector<LocalArc> arcs;
  for (std::size_t v : members)
    for (std::size_t a : D.out(v)) {
      const Arc& arc = D.arcs()[a];
      if (comp[arc.target] != c) continue;
      arcs.push_back({local[v], local[arc.target], negate ? Rational(-arc.weight) : arc.weight});
    }
  if (arcs.empty()) return std::nullopt;
  if (s == 1) return arcs.front().w;

  // d[k][v]: heaviest walk of exactly k arcs from node 0 to v.
  std::vector<std::vector<Rational>> d(s + 1, std::vector<Rational>(s));
  std::vector<std::vector<char>> has(s + 1, std::vector<char>(s, 0));
  has[0][0] = 1;
  for (std::size_t k = 1; k <= s; ++k)
    for (const auto& a : arcs) {
      if (!has[k - 1][a.u]) continue;
      Rational cand = d[k - 1][a.u] + a.w;
      if (!has[k][a.v] || d[k][a.v] < cand) {
        d[k][a.v] = cand;
        has[k][a.v] = 1;
      }
    }
  std::optional<Rational> best;
  for (std::size_t v = 0; v < s; ++v) {
    if (!has[s][v]) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < s; ++k) {
      if (!has[k][v]) continue;
      Rational r = (d[s][v] - d[k][v]) / Rational(static_cast<long>(s - k));
      if (!worst || r < *worst) worst = r;
    }
    if (worst && (!best || *best < *worst)) best = worst;
  }
  return best;
}

}  // namespace

std::vector<std::optional<Rational>> cycle_means(const WeightedDigraph& D, const SccDecomposition& scc,
                                                 MeanMode mode) {
  bool negate = mode == MeanMode::min;
  std::vector<std::optional<Rational>> out(scc.count());
  for (std::size_t c = 0; c < scc.count(); ++c) {
    auto r = karp_max(D, scc.members[c], scc.component, c, negate);
    if (r && negate) r = Rational(-*r);
    out[c] = r;
  }
  return out;
}

std::vector<std::optional<Rational>> cycle_means(const WeightedDigraph& D, MeanMode mode) {
  return cycle_means(D, strongly_connected_components(D), mode);
}

Vector cycle_time_vector(const TropMatrix& E, MeanMode mode) {
  WeightedDigraph D = WeightedDigraph::of_matrix(E);
  SccDecomposition scc = strongly_connected_components(D);
  auto means = cycle_means(D, scc, mode);
  ExtendedNumber none = mode == MeanMode::max ? ExtendedNumber::neg_inf() : ExtendedNumber::pos_inf();
  auto better = [&](const ExtendedNumber& a, const ExtendedNumber& b) { return mode == MeanMode::max ? b < a : a < b; };

  // Reverse topological numbering: successors of a component have smaller ids.
  std::vector<ExtendedNumber> best(scc.count(), none);
  for (std::size_t c = 0; c < scc.count(); ++c) {
    if (means[c]) best[c] = ExtendedNumber(*means[c]);
    for (std::size_t v : scc.members[c])
      for (std::size_t a : D.out(v)) {
        std::size_t c2 = scc.component[D.arcs()[a].target];
        if (c2 != c && better(best[c2], best[c])) best[c] = best[c2];
      }
  }
  Vector chi(E.rows());
  for (std::size_t i = 0; i < E.rows(); ++i) chi[i] = best[scc.component[i]];
  return chi;
}

}  // namespace tropfrac
