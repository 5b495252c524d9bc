#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropfrac/extended.hpp"
#include "tropfrac/matrix.hpp"

namespace tropfrac {

struct Arc {
  std::size_t source, target;
  Rational weight;
};

// Finite weights, at most one arc per ordered pair.
class WeightedDigraph {
 public:
  explicit WeightedDigraph(std::size_t nodes = 0) : out_(nodes) {}
  // Arc i -> j for every finite e_ij.
  static WeightedDigraph of_matrix(const TropMatrix& E);

  std::size_t size() const { return out_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  // Indices into arcs().
  const std::vector<std::size_t>& out(std::size_t v) const { return out_[v]; }

  // Throws std::invalid_argument on a duplicate pair or a bad endpoint.
  void add_arc(std::size_t source, std::size_t target, Rational weight);

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

struct SccDecomposition {
  // Components are numbered in reverse topological order: arcs between
  // components go from a higher id to a lower one.
  std::vector<std::size_t> component;
  std::vector<std::vector<std::size_t>> members;
  std::size_t count() const { return members.size(); }
};

SccDecomposition strongly_connected_components(const WeightedDigraph& D);
std::vector<char> reachable_from(const WeightedDigraph& D, std::size_t start);

struct SccAccess {
  SccDecomposition scc;
  std::vector<char> access;
};
SccAccess scc_and_access(const WeightedDigraph& D, std::size_t query);

enum class MeanMode { max, min };

// Per component (indexed as in strongly_connected_components): the maximal or
// minimal mean weight per arc over its cycles, or nullopt for acyclic components.
std::vector<std::optional<Rational>> cycle_means(const WeightedDigraph& D, MeanMode mode);
std::vector<std::optional<Rational>> cycle_means(const WeightedDigraph& D, const SccDecomposition& scc,
                                                 MeanMode mode);

// chi_i: best cycle mean over components reachable from i; -inf (max) or +inf
// (min) when none.
Vector cycle_time_vector(const TropMatrix& E, MeanMode mode);

}  // namespace tropfrac
