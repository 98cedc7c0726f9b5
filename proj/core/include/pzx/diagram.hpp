#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pzx/phase.hpp"
#include "pzx/ring.hpp"
#include "pzx/subterm.hpp"

namespace pzx {

enum class VertexKind : std::uint8_t { Z, X, Boundary };
enum class EdgeType : std::uint8_t { Simple, Hadamard };

inline EdgeType compose_edges(EdgeType a, EdgeType b) {
    return (a == b) ? EdgeType::Simple : EdgeType::Hadamard;
}
inline EdgeType toggle_edge(EdgeType a) {
    return (a == EdgeType::Simple) ? EdgeType::Hadamard : EdgeType::Simple;
}

struct HalfEdge {
    SpiderId to = 0;
    EdgeType type = EdgeType::Simple;
    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

struct Vertex {
    VertexKind kind = VertexKind::Z;
    ParamPhase phase;
    std::vector<HalfEdge> adj;  // undirected; a self-loop appears twice
    bool alive = false;
};

/// Undirected multigraph of Z/X spiders with polarised phases, plus boundary
/// wires, an exact global scalar and the scalar subterms emitted by rewrites.
/// Plain value type; ids are never reused within a diagram's lifetime.
class ZXDiagram {
public:
    ZXDiagram() = default;

    SpiderId add_spider(VertexKind kind, ParamPhase phase = {});
    SpiderId add_input();
    SpiderId add_output();
    void add_edge(SpiderId u, SpiderId v, EdgeType type = EdgeType::Simple);
    /// Remove one u-v edge instance of the given type.
    void remove_edge_instance(SpiderId u, SpiderId v, EdgeType type);
    void remove_vertex(SpiderId u);

    bool alive(SpiderId u) const { return u < verts_.size() && verts_[u].alive; }
    const Vertex& vertex(SpiderId u) const;
    Vertex& vertex(SpiderId u);
    bool is_boundary(SpiderId u) const { return vertex(u).kind == VertexKind::Boundary; }
    std::size_t degree(SpiderId u) const { return vertex(u).adj.size(); }
    bool is_interior(SpiderId u) const;

    /// Ascending ids of alive vertices (optionally spiders only).
    std::vector<SpiderId> vertices(bool spiders_only = false) const;
    std::size_t spider_count() const;
    /// Number of spiders whose phase constant is an odd multiple of pi/4.
    std::size_t t_count() const;

    const std::vector<SpiderId>& inputs() const { return inputs_; }
    const std::vector<SpiderId>& outputs() const { return outputs_; }
    std::vector<SpiderId>& inputs() { return inputs_; }
    std::vector<SpiderId>& outputs() { return outputs_; }

    const RingQuad& scalar() const { return scalar_; }
    void scalar_mul(const RingQuad& f) { scalar_ = ring_mul(scalar_, f); }
    void set_scalar(const RingQuad& s) { scalar_ = s; }

    const std::vector<Subterm>& pending_subterms() const { return pending_; }
    /// Append a subterm, folding assignment-independent ones into the scalar.
    void push_subterm(const Subterm& s);
    void clear_pending() { pending_.clear(); }

    // -- parameters ------------------------------------------------------
    unsigned ensure_param(const std::string& name);
    const std::vector<std::string>& param_names() const { return param_names_; }
    void set_param_names(std::vector<std::string> names);
    std::uint64_t used_param_mask() const;

    std::size_t next_id() const { return verts_.size(); }

private:
    std::vector<Vertex> verts_;
    std::vector<SpiderId> inputs_;
    std::vector<SpiderId> outputs_;
    RingQuad scalar_ = RingQuad::one();
    std::vector<Subterm> pending_;
    std::vector<std::string> param_names_;
};

/// Total instantiation: phases resolved, pending subterms folded into the
/// global scalar. The result carries no parameters.
ZXDiagram instantiate_diagram(const ZXDiagram& d, const ParamAssignment& a);

/// JSON codec for the diagram interchange format.
std::string diagram_to_json(const ZXDiagram& d);
ZXDiagram diagram_from_json(const std::string& text);

} // namespace pzx
