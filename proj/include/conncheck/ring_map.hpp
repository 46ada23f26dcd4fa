#pragma once

// Polynomial ring maps, their kernels and contractions of ideals, all via
// elimination in the graph ring K[target vars, source vars].

#include <optional>
#include <string>
#include <vector>

#include "conncheck/ideal.hpp"

namespace conncheck {

/// Source variable i maps to images[i]. When the target is a quotient ring,
/// `target_relations` holds its defining ideal.
struct RingMap {
  RingPtr source;
  RingPtr target;
  std::vector<Polynomial> images;
  std::optional<Ideal> target_relations;

  RingMap(RingPtr src, RingPtr tgt, std::vector<Polynomial> imgs, std::optional<Ideal> relations = std::nullopt)
      : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)),
        target_relations(std::move(relations)) {
    if (images.size() != source->nvars())
      throw StructuralError("ring map needs " + std::to_string(source->nvars()) + " images, got " +
                            std::to_string(images.size()));
    for (const auto& img : images)
      if (!same_ring(img.ring(), target))
        throw StructuralError("ring map image outside the target ring");
    if (target_relations && !same_ring(target_relations->ring(), target))
      throw StructuralError("target relations live outside the target ring");
    if (source->field() != target->field())
      throw StructuralError("ring map between different coefficient fields");
  }

  bool target_is_polynomial_ring() const { return !target_relations || target_relations->is_zero(); }

  Polynomial apply(const Polynomial& f) const { return f.substitute(target, images); }
};

namespace detail {

struct GraphRing {
  RingPtr ring;
  std::vector<std::size_t> from_target;
  std::vector<std::size_t> from_source;
  std::vector<std::size_t> to_source;
};

inline GraphRing graph_ring(const RingMap& phi) {
  const std::size_t nt = phi.target->nvars();
  const std::size_t ns = phi.source->nvars();
  std::vector<std::string> names = phi.target->names();
  for (const auto& n : phi.source->names()) {
    std::string name = n;
    while (std::find(names.begin(), names.end(), name) != names.end())
      name += "_";
    names.push_back(name);
  }
  GraphRing g{PolyRing::make(std::move(names), phi.source->field()), shift_map(nt, 0), shift_map(ns, nt),
              unshift_map(nt + ns, nt)};
  return g;
}

/// (φ^{-1}(extra)) via elimination; extra = (0) gives the kernel.
inline Ideal pull_back(const RingMap& phi, const std::vector<Polynomial>& extra) {
  const GraphRing g = graph_ring(phi);
  const std::size_t nt = phi.target->nvars();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < phi.images.size(); ++i)
    gens.push_back(Polynomial::variable(g.ring, nt + i) - phi.images[i].map_variables(g.ring, g.from_target));
  if (phi.target_relations)
    for (const auto& r : phi.target_relations->generators())
      gens.push_back(r.map_variables(g.ring, g.from_target));
  for (const auto& q : extra)
    gens.push_back(q.map_variables(g.ring, g.from_target));
  const Ideal lifted = eliminate(Ideal(g.ring, std::move(gens)), nt);
  std::vector<Polynomial> out;
  for (const auto& h : lifted.generators())
    out.push_back(h.map_variables(phi.source, g.to_source));
  return Ideal(phi.source, std::move(out));
}

} // namespace detail

inline Ideal ring_map_kernel(const RingMap& phi) { return detail::pull_back(phi, {}); }

/// φ^{-1}(Q) for an ideal Q of the target.
inline Ideal contract(const Ideal& Q, const RingMap& phi) {
  if (!same_ring(Q.ring(), phi.target))
    throw StructuralError("contracted ideal must live in the map's target");
  return detail::pull_back(phi, Q.generators());
}

} // namespace conncheck
