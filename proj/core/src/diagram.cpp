#include "pzx/diagram.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace pzx {

SpiderId ZXDiagram::add_spider(VertexKind kind, ParamPhase phase) {
    if (kind == VertexKind::Boundary) {
        throw DomainError("boundaries are added via add_input/add_output");
    }
    Vertex v;
    v.kind = kind;
    v.phase = phase;
    v.alive = true;
    verts_.push_back(std::move(v));
    return static_cast<SpiderId>(verts_.size() - 1);
}

SpiderId ZXDiagram::add_input() {
    Vertex v;
    v.kind = VertexKind::Boundary;
    v.alive = true;
    verts_.push_back(std::move(v));
    const auto id = static_cast<SpiderId>(verts_.size() - 1);
    inputs_.push_back(id);
    return id;
}

SpiderId ZXDiagram::add_output() {
    Vertex v;
    v.kind = VertexKind::Boundary;
    v.alive = true;
    verts_.push_back(std::move(v));
    const auto id = static_cast<SpiderId>(verts_.size() - 1);
    outputs_.push_back(id);
    return id;
}

void ZXDiagram::add_edge(SpiderId u, SpiderId v, EdgeType type) {
    vertex(u).adj.push_back({v, type});
    vertex(v).adj.push_back({u, type});
}

void ZXDiagram::remove_edge_instance(SpiderId u, SpiderId v, EdgeType type) {
    auto erase_one = [](std::vector<HalfEdge>& adj, SpiderId to, EdgeType t) {
        auto it = std::find(adj.begin(), adj.end(), HalfEdge{to, t});
        if (it == adj.end()) {
            throw DomainError("edge instance not present");
        }
        adj.erase(it);
    };
    erase_one(vertex(u).adj, v, type);
    erase_one(vertex(v).adj, u, type);
}

void ZXDiagram::remove_vertex(SpiderId u) {
    auto& vu = vertex(u);
    for (const auto& half : vu.adj) {
        if (half.to == u) continue;  // self-loop halves die with the vertex
        auto& other = vertex(half.to).adj;
        auto it = std::find(other.begin(), other.end(), HalfEdge{u, half.type});
        other.erase(it);
    }
    vu.adj.clear();
    vu.alive = false;
}

const Vertex& ZXDiagram::vertex(SpiderId u) const {
    if (!alive(u)) throw DomainError("dead or unknown vertex id");
    return verts_[u];
}

Vertex& ZXDiagram::vertex(SpiderId u) {
    if (!alive(u)) throw DomainError("dead or unknown vertex id");
    return verts_[u];
}

bool ZXDiagram::is_interior(SpiderId u) const {
    for (const auto& half : vertex(u).adj) {
        if (verts_[half.to].kind == VertexKind::Boundary) return false;
    }
    return true;
}

std::vector<SpiderId> ZXDiagram::vertices(bool spiders_only) const {
    std::vector<SpiderId> out;
    for (SpiderId id = 0; id < verts_.size(); ++id) {
        if (!verts_[id].alive) continue;
        if (spiders_only && verts_[id].kind == VertexKind::Boundary) continue;
        out.push_back(id);
    }
    return out;
}

std::size_t ZXDiagram::spider_count() const {
    std::size_t n = 0;
    for (const auto& v : verts_) {
        if (v.alive && v.kind != VertexKind::Boundary) ++n;
    }
    return n;
}

std::size_t ZXDiagram::t_count() const {
    std::size_t n = 0;
    for (const auto& v : verts_) {
        if (v.alive && v.kind != VertexKind::Boundary && v.phase.t_like()) ++n;
    }
    return n;
}

void ZXDiagram::push_subterm(const Subterm& s) {
    if (s.param_mask() == 0) {
        scalar_ = ring_mul(scalar_, subterm_value(s, ParamAssignment{}));
    } else {
        pending_.push_back(s);
    }
}

unsigned ZXDiagram::ensure_param(const std::string& name) {
    for (unsigned i = 0; i < param_names_.size(); ++i) {
        if (param_names_[i] == name) return i;
    }
    if (param_names_.size() >= kMaxParams) {
        throw DomainError("parameter capacity (64) exceeded");
    }
    param_names_.push_back(name);
    return static_cast<unsigned>(param_names_.size() - 1);
}

void ZXDiagram::set_param_names(std::vector<std::string> names) {
    if (names.size() > kMaxParams) {
        throw DomainError("parameter capacity (64) exceeded");
    }
    param_names_ = std::move(names);
}

std::uint64_t ZXDiagram::used_param_mask() const {
    std::uint64_t m = 0;
    for (const auto& v : verts_) {
        if (v.alive) m |= v.phase.mask;
    }
    for (const auto& s : pending_) m |= s.param_mask();
    return m;
}

ZXDiagram instantiate_diagram(const ZXDiagram& d, const ParamAssignment& a) {
    if (!a.covers(d.used_param_mask())) {
        throw MissingParameter("assignment does not cover the diagram's parameters");
    }
    ZXDiagram out = d;
    for (SpiderId id : out.vertices(true)) {
        auto& v = out.vertex(id);
        v.phase = ParamPhase(instantiate_phase(v.phase, a));
    }
    RingQuad s = out.scalar();
    for (const auto& sub : out.pending_subterms()) {
        s = ring_mul(s, subterm_value(sub, a));
    }
    out.set_scalar(s);
    out.clear_pending();
    return out;
}

namespace {

nlohmann::json mask_to_names(std::uint64_t mask, const std::vector<std::string>& names) {
    nlohmann::json arr = nlohmann::json::array();
    for (unsigned i = 0; i < 64; ++i) {
        if ((mask >> i) & 1) {
            arr.push_back(i < names.size() ? names[i] : "p" + std::to_string(i));
        }
    }
    return arr;
}

} // namespace

std::string diagram_to_json(const ZXDiagram& d) {
    nlohmann::json j;
    j["spiders"] = nlohmann::json::array();
    for (SpiderId id : d.vertices(true)) {
        const auto& v = d.vertex(id);
        j["spiders"].push_back({{"id", id},
                                {"kind", v.kind == VertexKind::Z ? "Z" : "X"},
                                {"k", v.phase.k},
                                {"mask", mask_to_names(v.phase.mask, d.param_names())}});
    }
    j["edges"] = nlohmann::json::array();
    for (SpiderId u : d.vertices()) {
        for (const auto& half : d.vertex(u).adj) {
            if (half.to < u) continue;
            if (half.to == u) continue;  // emitted below
            j["edges"].push_back({u, half.to, half.type == EdgeType::Simple ? "s" : "h"});
        }
        // self-loops: each loop contributes two halves
        std::size_t loops_s = 0, loops_h = 0;
        for (const auto& half : d.vertex(u).adj) {
            if (half.to == u) (half.type == EdgeType::Simple ? loops_s : loops_h) += 1;
        }
        for (std::size_t i = 0; i < loops_s / 2; ++i) j["edges"].push_back({u, u, "s"});
        for (std::size_t i = 0; i < loops_h / 2; ++i) j["edges"].push_back({u, u, "h"});
    }
    j["inputs"] = d.inputs();
    j["outputs"] = d.outputs();
    j["scalar"] = {{"a", d.scalar().a}, {"b", d.scalar().b}, {"c", d.scalar().c},
                   {"d", d.scalar().d}, {"exp", d.scalar().exp}};
    return j.dump(2);
}

ZXDiagram diagram_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("diagram JSON: ") + e.what());
    }
    try {
        ZXDiagram d;
        std::map<std::int64_t, SpiderId> remap;
        for (const auto& s : j.at("spiders")) {
            const std::string kind = s.at("kind");
            if (kind != "Z" && kind != "X") throw ParseError("spider kind must be Z or X");
            const int k = s.at("k");
            if (k < 0 || k > 7) throw ParseError("spider phase constant out of [0,7]");
            std::uint64_t mask = 0;
            if (s.contains("mask")) {
                for (const auto& name : s.at("mask")) {
                    mask |= std::uint64_t{1} << d.ensure_param(name.get<std::string>());
                }
            }
            remap[s.at("id").get<std::int64_t>()] =
                d.add_spider(kind == "Z" ? VertexKind::Z : VertexKind::X,
                             ParamPhase(k, mask));
        }
        auto resolve = [&](const nlohmann::json& idj, bool input) -> SpiderId {
            const auto raw = idj.get<std::int64_t>();
            auto it = remap.find(raw);
            if (it != remap.end()) return it->second;
            const SpiderId b = input ? d.add_input() : d.add_output();
            remap[raw] = b;
            return b;
        };
        // boundary ids are exactly those listed under inputs/outputs
        for (const auto& idj : j.at("inputs")) resolve(idj, true);
        for (const auto& idj : j.at("outputs")) resolve(idj, false);
        for (const auto& e : j.at("edges")) {
            const auto u = e.at(0).get<std::int64_t>();
            const auto v = e.at(1).get<std::int64_t>();
            const std::string t = e.at(2);
            if (t != "s" && t != "h") throw ParseError("edge type must be \"s\" or \"h\"");
            if (!remap.count(u) || !remap.count(v)) {
                throw ParseError("edge references an unknown vertex id");
            }
            d.add_edge(remap[u], remap[v],
                       t == "s" ? EdgeType::Simple : EdgeType::Hadamard);
        }
        if (j.contains("scalar")) {
            const auto& s = j.at("scalar");
            d.set_scalar(RingQuad::make(s.at("a"), s.at("b"), s.at("c"), s.at("d"),
                                        s.at("exp")));
        }
        for (SpiderId b : d.inputs()) {
            if (d.degree(b) != 1) throw ParseError("input wire must have degree 1");
        }
        for (SpiderId b : d.outputs()) {
            if (d.degree(b) != 1) throw ParseError("output wire must have degree 1");
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("diagram JSON: ") + e.what());
    }
}

} // namespace pzx
