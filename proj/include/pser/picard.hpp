#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "pser/series.hpp"

namespace pser {

// t ↦ slope·t + offset on truncated series. Contractive (constant 1/2 in the
// ultrametric) exactly when the slope has order >= 1.
struct AffineMap {
    Series slope;
    Series offset;

    [[nodiscard]] bool is_contractive() const { return order(slope) >= SeriesOrder::finite(1); }

    // Result precision is the minimum of the three operand precisions.
    [[nodiscard]] Series operator()(const Series& t) const { return add(cauchy_product(slope, t), offset); }
};

// An equi-contractive sequence of affine maps for crossed iteration: step m
// applies maps(m). limit_map, when known, is the pointwise limit whose fixed
// point the crossed iterates converge to.
struct IterationScheme {
    std::function<AffineMap(std::size_t)> maps;
    std::optional<AffineMap> limit_map;
};

class IterationTrace {
public:
    explicit IterationTrace(std::vector<Series> iterates);

    [[nodiscard]] std::size_t size() const { return iterates_.size(); }
    [[nodiscard]] const Series& operator[](std::size_t m) const { return iterates_[m]; }
    [[nodiscard]] const Series& front() const { return iterates_.front(); }
    [[nodiscard]] const Series& back() const { return iterates_.back(); }
    [[nodiscard]] const std::vector<Series>& iterates() const { return iterates_; }

    // For every iterate m >= 1, the remainder r_m = iterate_m - T_{m-1}(limit)
    // laid out as the row of its coefficients from degree m up to its last
    // nonzero coefficient (an empty row when r_m vanishes). Throws
    // domain_error if some r_m has a nonzero coefficient below degree m,
    // i.e. the iterate does not yet agree with the limit through degree m-1.
    // Iterates must hold their whole polynomial within their precision for
    // the rows to be complete.
    [[nodiscard]] std::vector<std::vector<Rational>> remainder_rows(const Series& limit) const;

private:
    std::vector<Series> iterates_;
};

/// Plain Picard iteration of one contraction: iterates start, map(start), ...
/// with steps+1 entries. Throws not_contractive_error if order(slope) = 0 and
/// precision_error if the common precision is below steps-1.
IterationTrace iterate_fixed(const AffineMap& map, const Series& start, std::size_t steps);

/// Crossed (generalized Banach) iteration: iterate m+1 = scheme.maps(m)(iterate m).
/// Throws not_contractive_error naming the first offending step.
IterationTrace iterate_crossed(const IterationScheme& scheme, const Series& start, std::size_t steps);

/// The reciprocation scheme
///   h_{m,1}(t) = T_m((g0-g)/g0)·t + T_m(f/g0)
/// at precision min(P_f, P_g). Throws division_domain_error when g0 = 0.
IterationScheme reciprocal_scheme(const Series& f, const Series& g);

/// Scheme for column n >= 2 of T(f|g), built from column n-1
/// (prev_column = x^{n-2}·f/g^{n-1}):
///   h_{m,n}(t) = T_m((g0-g)/g0)·t + x·T_{m-1}(prev_column/g0)
/// Its limit's fixed point is x^{n-1}·f/g^n. Working precision is
/// min(P_g, P_prev + 1). Throws division_domain_error when g0 = 0 and
/// std::invalid_argument when n < 2.
IterationScheme column_scheme(const Series& f, const Series& g, std::size_t n, const Series& prev_column);

/// f/g through degree `precision`, by precision+1 crossed steps of the
/// reciprocation scheme from 0.
Series reciprocal(const Series& f, const Series& g, std::size_t precision);

/// The first `count` columns x^{k}·f/g^{k+1} (k = 0..count-1) of T(f|g), each
/// obtained by crossed iteration seeded with the previous column.
std::vector<Series> iterate_columns(const Series& f, const Series& g, std::size_t count, std::size_t precision);

} // namespace pser
