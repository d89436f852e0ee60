#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace preproj {

enum class QuiverKind { TypeT, TypeA };

using IntMatrix = std::vector<std::vector<long>>;

struct Edge {
    int source = 0;  // 0-based vertex index
    int target = 0;
};

// Underlying quiver Q': the path 1 - 2 - ... with arrows i -> i+1, plus the loop for type T.
class Quiver {
public:
    QuiverKind kind() const { return kind_; }
    // n for T_n, m for A_m.
    int size() const { return size_; }
    int num_vertices() const { return size_; }
    int coxeter_number() const { return h_; }
    const std::vector<Edge>& arrows() const { return arrows_; }
    std::optional<int> loop_vertex() const { return loop_; }
    std::string name() const;

    friend Quiver make_type_t(int n);
    friend Quiver make_type_a(int m);

private:
    QuiverKind kind_ = QuiverKind::TypeT;
    int size_ = 0;
    int h_ = 0;
    std::vector<Edge> arrows_;
    std::optional<int> loop_;
};

Quiver make_type_t(int n);
Quiver make_type_a(int m);

IntMatrix adjacency(const Quiver& q);
// C with the sign of the diagonal changed.
IntMatrix adjacency_signed_diagonal(const Quiver& q);

struct Arrow {
    int id = 0;
    int source = 0;
    int target = 0;
    int eps = 1;
    int star = 0;
    bool loop = false;
    std::string name;
};

// Paths compose right to left: the product xy runs y first, then x.
// Hence e_i * a * e_j != 0 exactly when a goes from j to i.
class DoubledQuiver {
public:
    const Quiver& base() const { return base_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int id) const { return arrows_.at(static_cast<std::size_t>(id)); }
    int num_vertices() const { return base_.num_vertices(); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    // Left idempotent of an arrow (its target) and right idempotent (its source).
    int left(int id) const { return arrow(id).target; }
    int right(int id) const { return arrow(id).source; }
    std::optional<int> loop_arrow() const { return loop_arrow_; }
    // a_i for 1 <= i < number of vertices (arrow i -> i+1), 1-based label.
    int forward_arrow(int i) const;
    int find(const std::string& name) const;

    friend DoubledQuiver double_quiver(const Quiver& q);

private:
    Quiver base_;
    std::vector<Arrow> arrows_;
    std::optional<int> loop_arrow_;
};

DoubledQuiver double_quiver(const Quiver& q);

nlohmann::json to_json(const Quiver& q);

}  // namespace preproj
