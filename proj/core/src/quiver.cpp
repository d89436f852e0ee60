#include "preproj/quiver.hpp"

namespace preproj {

std::string Quiver::name() const {
    return (kind_ == QuiverKind::TypeT ? "T" : "A") + std::to_string(size_);
}

Quiver make_type_t(int n) {
    if (n < 1) throw std::invalid_argument("make_type_t: n must be at least 1");
    Quiver q;
    q.kind_ = QuiverKind::TypeT;
    q.size_ = n;
    q.h_ = 2 * n + 1;
    for (int i = 0; i + 1 < n; ++i) q.arrows_.push_back({i, i + 1});
    q.arrows_.push_back({n - 1, n - 1});
    q.loop_ = n - 1;
    return q;
}

Quiver make_type_a(int m) {
    if (m < 1) throw std::invalid_argument("make_type_a: m must be at least 1");
    Quiver q;
    q.kind_ = QuiverKind::TypeA;
    q.size_ = m;
    q.h_ = m + 1;
    for (int i = 0; i + 1 < m; ++i) q.arrows_.push_back({i, i + 1});
    return q;
}

IntMatrix adjacency(const Quiver& q) {
    auto n = static_cast<std::size_t>(q.num_vertices());
    IntMatrix c(n, std::vector<long>(n, 0));
    for (const auto& e : q.arrows()) {
        auto s = static_cast<std::size_t>(e.source);
        auto t = static_cast<std::size_t>(e.target);
        if (s == t) {
            c[s][s] += 1;
        } else {
            c[s][t] += 1;
            c[t][s] += 1;
        }
    }
    return c;
}

IntMatrix adjacency_signed_diagonal(const Quiver& q) {
    auto c = adjacency(q);
    for (std::size_t i = 0; i < c.size(); ++i) c[i][i] = -c[i][i];
    return c;
}

DoubledQuiver double_quiver(const Quiver& q) {
    DoubledQuiver d;
    d.base_ = q;
    std::vector<Edge> forward;
    for (const auto& e : q.arrows())
        if (e.source != e.target) forward.push_back(e);
    int k = static_cast<int>(forward.size());
    for (int i = 0; i < k; ++i) {
        const auto& e = forward[static_cast<std::size_t>(i)];
        d.arrows_.push_back({i, e.source, e.target, 1, k + i, false, "a" + std::to_string(i + 1)});
    }
    for (int i = 0; i < k; ++i) {
        const auto& e = forward[static_cast<std::size_t>(i)];
        d.arrows_.push_back({k + i, e.target, e.source, -1, i, false, "a" + std::to_string(i + 1) + "*"});
    }
    if (q.loop_vertex()) {
        int id = 2 * k;
        d.arrows_.push_back({id, *q.loop_vertex(), *q.loop_vertex(), 1, id, true, "b"});
        d.loop_arrow_ = id;
    }
    return d;
}

int DoubledQuiver::forward_arrow(int i) const {
    if (i < 1 || i >= num_vertices()) throw std::out_of_range("forward_arrow: index out of range");
    return i - 1;
}

int DoubledQuiver::find(const std::string& name) const {
    for (const auto& a : arrows_)
        if (a.name == name) return a.id;
    throw std::out_of_range("unknown arrow " + name);
}

nlohmann::json to_json(const Quiver& q) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& e : q.arrows()) arrows.push_back({{"source", e.source + 1}, {"target", e.target + 1}});
    nlohmann::json j;
    j["kind"] = q.kind() == QuiverKind::TypeT ? "T" : "A";
    j["n"] = q.size();
    j["h"] = q.coxeter_number();
    j["arrows"] = arrows;
    j["loop_vertex"] = q.loop_vertex() ? nlohmann::json(*q.loop_vertex() + 1) : nlohmann::json(nullptr);
    return j;
}

}  // namespace preproj
