#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "circuit.hpp"
#include "error.hpp"
#include "format.hpp"

namespace ladderlab {

/// Parse error carrying the 0-based character offset it points at.
class source_error : public error {
public:
    source_error(std::size_t position, const std::string& message)
        : error(message), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

/// Recursive-descent parser for the circuit expression language.
///
/// Grammar (lowest precedence first):
///   parallel := series ('|' series)*
///   series   := atom ('-' atom)*
///   atom     := element | '(' parallel ')'
///   element  := ('R' | 'L') ':' number
///
/// '-' binds tighter than '|', so "R:1 - L:2 | R:3" is (R:1 - L:2) | R:3.
class circuit_parser {
public:
    explicit circuit_parser(std::string_view text) : text_(text) {}

    [[nodiscard]] circuit parse() {
        circuit result = parse_parallel(0);
        skip_spaces();
        if (pos_ != text_.size()) throw source_error(pos_, "trailing characters after circuit");
        return result;
    }

private:
    static constexpr int max_nesting = 256;

    circuit parse_parallel(int depth) {
        std::vector<circuit> branches;
        branches.push_back(parse_series(depth));
        while (take('|')) branches.push_back(parse_series(depth));
        if (branches.size() == 1) return std::move(branches.front());
        return circuit::parallel(std::move(branches));
    }

    circuit parse_series(int depth) {
        std::vector<circuit> parts;
        parts.push_back(parse_atom(depth));
        while (take('-')) parts.push_back(parse_atom(depth));
        if (parts.size() == 1) return std::move(parts.front());
        return circuit::series(std::move(parts));
    }

    circuit parse_atom(int depth) {
        skip_spaces();
        if (pos_ >= text_.size()) throw source_error(pos_, "unexpected end of input");
        const char head = text_[pos_];
        if (head == '(') {
            if (depth >= max_nesting) throw source_error(pos_, "expression nests too deeply");
            const std::size_t open = pos_++;
            circuit inner = parse_parallel(depth + 1);
            skip_spaces();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw source_error(open, "unbalanced parenthesis");
            ++pos_;
            return inner;
        }
        if (head == 'R' || head == 'L') {
            ++pos_;
            skip_spaces();
            if (pos_ >= text_.size() || text_[pos_] != ':')
                throw source_error(pos_, "expected ':' after element kind");
            ++pos_;
            skip_spaces();
            return circuit::leaf(parse_element_value(
                head == 'R' ? component_kind::resistor : component_kind::inertance));
        }
        throw source_error(pos_, "unknown token");
    }

    component parse_element_value(component_kind kind) {
        const std::size_t value_at = pos_;
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        double value = 0.0;
        auto [parsed_to, ec] = std::from_chars(begin, end, value);
        if (ec == std::errc::invalid_argument) throw source_error(value_at, "expected a number");
        pos_ = static_cast<std::size_t>(parsed_to - text_.data());
        if (ec == std::errc::result_out_of_range || !std::isfinite(value))
            throw source_error(value_at, "non-finite component value");
        if (value <= 0.0) throw source_error(value_at, "non-positive component value");
        return component(kind, value);
    }

    bool take(char op) {
        skip_spaces();
        if (pos_ < text_.size() && text_[pos_] == op) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_spaces() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline void format_circuit_into(const circuit& c, std::string& out, bool parenthesize_parallel) {
    switch (c.kind()) {
        case circuit_kind::leaf: {
            const component& element = c.element();
            out += element.kind() == component_kind::resistor ? "R:" : "L:";
            out += format_double(element.value());
            return;
        }
        case circuit_kind::series: {
            bool first = true;
            for (const circuit& child : c.children()) {
                if (!std::exchange(first, false)) out += " - ";
                format_circuit_into(child, out, true);
            }
            return;
        }
        case circuit_kind::parallel: {
            if (parenthesize_parallel) out += '(';
            bool first = true;
            for (const circuit& child : c.children()) {
                if (!std::exchange(first, false)) out += " | ";
                format_circuit_into(child, out, false);
            }
            if (parenthesize_parallel) out += ')';
            return;
        }
    }
}

} // namespace detail

/// Parses an expression like "L:1 - (R:2 | L:0.5)" into a circuit.
/// Whitespace is insignificant; errors carry the offending character offset.
[[nodiscard]] inline circuit parse_circuit(std::string_view text) {
    return detail::circuit_parser(text).parse();
}

/// Canonical text form: series parts joined by " - ", parallel branches by
/// " | ", parentheses only where precedence demands them (a parallel node
/// under a series node). Values print in shortest round-trip form, so
/// parse_circuit(format_circuit(c)) == c.
[[nodiscard]] inline std::string format_circuit(const circuit& c) {
    std::string out;
    detail::format_circuit_into(c, out, false);
    return out;
}

} // namespace ladderlab
