#ifndef QWC_QUIVER_HPP
#define QWC_QUIVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "qwc/weight_form.hpp"

namespace qwc {

struct Arrow {
  std::string id;
  std::string from;
  std::string to;
  WeightForm weight;
};

struct RelationTerm {
  Rat coeff;
  std::vector<std::string> path;  // arrow ids, applied left to right
};

struct Relation {
  std::string id;
  std::vector<RelationTerm> terms;
};

// Quiver with relations and a distinguished framing vertex.  Vertices are
// ordered with the framing vertex last; dimension vectors, stability
// parameters and walls index the internal vertices in this order.
struct FramedQuiver {
  std::vector<std::string> vertices;
  std::string framing;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  std::vector<std::string> internal_vertices() const;
  int internal_index(const std::string& v) const;  // -1 when absent
  const Arrow* find_arrow(const std::string& id) const;

  // Start / end vertex and total arrow weight of a relation, derived from
  // its first term.
  std::string relation_out(const Relation& r) const;
  std::string relation_in(const Relation& r) const;
  WeightForm relation_weight(const Relation& r) const;
};

using DimVector = std::vector<long>;        // over internal vertices
using StabilityVector = std::vector<Rat>;   // zeta over internal vertices
using Wall = DimVector;                     // primitive, nonzero, <= alpha

std::vector<std::string> validate(const FramedQuiver& q);

Rat zeta_infinity(const StabilityVector& zeta, const DimVector& alpha);

long beta_bar_infinity(const FramedQuiver& q, const DimVector& beta);

// All primitive nonzero beta <= alpha, in lexicographic order.
std::vector<Wall> enumerate_walls(const DimVector& alpha);

enum class ParamKind { Generic, OnWall, Degenerate };

struct ParamClass {
  ParamKind kind;
  std::optional<Wall> wall;           // for OnWall
  std::vector<Wall> vanishing;        // walls with zeta(beta) = 0
  // sign of zeta(beta) per wall, aligned with enumerate_walls order;
  // -1 identifies the chamber C, +1 the chamber C'.
  std::vector<int> signs;
};

ParamClass classify_parameter(const StabilityVector& zeta, const DimVector& alpha);

// Enhancement: a chain of L new vertices feeding the chosen vertex.
// alpha0 >= 0 enables the L >= alpha0 precondition check.
FramedQuiver enhanced_quiver(const FramedQuiver& q, const std::string& zero, int L,
                             long alpha0 = -1);

// Sharp quiver: new framing vertex with a single arrow into `zero`; the old
// framing vertex becomes an ordinary vertex.
FramedQuiver sharp_quiver(const FramedQuiver& q, const std::string& zero);

// Built-in example quivers.  Arrow weights use the q1/q2 equivariant
// conventions of the ADHM-style presentations; framing multiplicities are
// parallel arrows.
FramedQuiver nakajima_quiver(const std::vector<std::string>& verts,
                             const std::vector<std::pair<std::string, std::string>>& edges,
                             const std::vector<long>& r);
FramedQuiver nakajima_graph(const std::string& graph, const std::vector<long>& r);
FramedQuiver chainsaw_quiver(int n, const std::vector<long>& r);
FramedQuiver blowup_quiver(long r);
FramedQuiver flag_quiver(int n, long w);
FramedQuiver single_vertex_quiver(long r);

std::string quiver_to_json(const FramedQuiver& q);
FramedQuiver quiver_from_json(const std::string& text);

}  // namespace qwc

#endif
