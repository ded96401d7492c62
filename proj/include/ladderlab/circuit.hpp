#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "component.hpp"
#include "error.hpp"
#include "types.hpp"

namespace ladderlab {

enum class circuit_kind { leaf, series, parallel };

/// Immutable series-parallel circuit tree.
///
/// Canonical form is maintained by construction: a series node never has a
/// series child, a parallel node never has a parallel child (nested same-kind
/// compositions are flattened), and every junction has at least two children.
/// Equality is structural on that canonical form; child order is significant.
class circuit {
public:
    /// Single element.
    [[nodiscard]] static circuit leaf(component element) { return circuit(element); }

    /// Series composition of two or more parts.
    [[nodiscard]] static circuit series(std::vector<circuit> parts) {
        return junction(circuit_kind::series, std::move(parts));
    }

    /// Parallel composition of two or more parts.
    [[nodiscard]] static circuit parallel(std::vector<circuit> parts) {
        return junction(circuit_kind::parallel, std::move(parts));
    }

    [[nodiscard]] circuit_kind kind() const noexcept { return kind_; }
    [[nodiscard]] bool is_leaf() const noexcept { return kind_ == circuit_kind::leaf; }

    /// Element of a leaf. Only valid when is_leaf().
    [[nodiscard]] const component& element() const { return element_.value(); }

    /// Children of a junction; empty for a leaf.
    [[nodiscard]] const std::vector<circuit>& children() const noexcept { return children_; }

    /// Number of elements (leaves) in the tree.
    [[nodiscard]] std::size_t weight() const noexcept {
        if (is_leaf()) return 1;
        std::size_t total = 0;
        for (const circuit& child : children_) total += child.weight();
        return total;
    }

    [[nodiscard]] bool operator==(const circuit&) const = default;

private:
    explicit circuit(component element) : kind_(circuit_kind::leaf), element_(element) {}

    circuit(circuit_kind kind, std::vector<circuit> children)
        : kind_(kind), children_(std::move(children)) {}

    static circuit junction(circuit_kind kind, std::vector<circuit> parts) {
        if (parts.size() < 2) throw arity_error("composition needs at least two parts");
        std::vector<circuit> flat;
        flat.reserve(parts.size());
        for (circuit& part : parts) {
            if (part.kind_ == kind) {
                for (circuit& child : part.children_) flat.push_back(std::move(child));
            } else {
                flat.push_back(std::move(part));
            }
        }
        return circuit(kind, std::move(flat));
    }

    circuit_kind kind_;
    std::optional<component> element_;
    std::vector<circuit> children_;
};

/// Series or parallel composition selected at runtime; rejects leaf.
[[nodiscard]] inline circuit compose(circuit_kind kind, std::vector<circuit> parts) {
    switch (kind) {
        case circuit_kind::series: return circuit::series(std::move(parts));
        case circuit_kind::parallel: return circuit::parallel(std::move(parts));
        default: throw kind_error("compose needs a series or parallel kind");
    }
}

/// Puts `root` in series with the parallel bundle of `children`; one child
/// attaches directly (a one-branch bundle is just that branch).
[[nodiscard]] inline circuit graft(component root, std::vector<circuit> children) {
    if (children.empty()) throw arity_error("graft needs at least one child");
    circuit bundle = children.size() == 1 ? std::move(children.front())
                                          : circuit::parallel(std::move(children));
    std::vector<circuit> parts;
    parts.reserve(2);
    parts.push_back(circuit::leaf(root));
    parts.push_back(std::move(bundle));
    return circuit::series(std::move(parts));
}

/// Rebuilds a tree bottom-up through the canonicalizing constructors. Every
/// reachable circuit is already canonical, so this is the identity; it exists
/// so canonicality can be asserted as a property.
[[nodiscard]] inline circuit canonicalize(const circuit& c) {
    if (c.is_leaf()) return c;
    std::vector<circuit> parts;
    parts.reserve(c.children().size());
    for (const circuit& child : c.children()) parts.push_back(canonicalize(child));
    return compose(c.kind(), std::move(parts));
}

/// Recursive ladder over per-stage (inertance, resistance) component pairs:
///
///   F(s1, ..., sn) = parallel(series(L1, F(s2, ..., sn)), R1)
///   F(sn)          = parallel(Ln, Rn)
///
/// Stage 1 sits at the input; the weight of the result is exactly 2n.
[[nodiscard]] inline circuit build_ladder_forest(
    std::span<const std::pair<component, component>> stages) {
    if (stages.empty()) throw arity_error("ladder needs at least one stage");
    for (const auto& [series_part, shunt_part] : stages) {
        if (series_part.kind() != component_kind::inertance)
            throw kind_error("ladder stage needs an inertance in series position");
        if (shunt_part.kind() != component_kind::resistor)
            throw kind_error("ladder stage needs a resistor in shunt position");
    }
    const auto& [an, bn] = stages.back();
    std::vector<circuit> base;
    base.reserve(2);
    base.push_back(circuit::leaf(an));
    base.push_back(circuit::leaf(bn));
    circuit acc = circuit::parallel(std::move(base));
    for (std::size_t k = stages.size() - 1; k-- > 0;) {
        const auto& [ak, bk] = stages[k];
        std::vector<circuit> arm;
        arm.reserve(2);
        arm.push_back(circuit::leaf(ak));
        arm.push_back(std::move(acc));
        circuit through = circuit::series(std::move(arm));
        std::vector<circuit> rung;
        rung.reserve(2);
        rung.push_back(std::move(through));
        rung.push_back(circuit::leaf(bk));
        acc = circuit::parallel(std::move(rung));
    }
    return acc;
}

/// Ladder over plain numeric stages; values are validated as components.
[[nodiscard]] inline circuit build_ladder_forest(std::span<const ladder_stage> stages) {
    std::vector<std::pair<component, component>> pairs;
    pairs.reserve(stages.size());
    for (const ladder_stage& stage : stages)
        pairs.emplace_back(inertance(stage.inertance), resistor(stage.resistance));
    return build_ladder_forest(std::span<const std::pair<component, component>>(pairs));
}

} // namespace ladderlab
