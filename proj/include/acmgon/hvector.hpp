#pragma once

// h-vectors of ACM space curves: validation, numerical invariants and the
// h-vector tests that decide where the longest multisecant line comes from.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "checked.hpp"
#include "error.hpp"

namespace acm {

/// Second difference of the Hilbert function of an ACM curve.
///
/// Stored densely as h(0..N) with h(N) > 0; the empty sequence is the empty
/// curve. Instances can only be obtained through `parse`, so every HVector
/// satisfies the admissibility conditions:
///   h(n) = n+1 for n < s, h non-increasing from s-1 on, finite support.
class HVector {
public:
    HVector() = default;

    static HVector parse(std::span<const Int> seq) {
        std::vector<Int> v(seq.begin(), seq.end());
        for (std::size_t n = 0; n < v.size(); ++n)
            if (v[n] < 0)
                throw Error(ErrorCode::RejectNegative,
                            "h(" + std::to_string(n) + ") = " + std::to_string(v[n]));
        while (!v.empty() && v.back() == 0) v.pop_back();

        std::size_t n = 0;
        for (; n < v.size() && v[n] >= static_cast<Int>(n) + 1; ++n)
            if (v[n] != static_cast<Int>(n) + 1)
                throw Error(ErrorCode::RejectInitialRamp,
                            "h(" + std::to_string(n) + ") = " + std::to_string(v[n]) + " exceeds " +
                                std::to_string(n + 1));
        // n is now s; from s-1 on the sequence may not increase.
        for (std::size_t m = (n == 0 ? 0 : n - 1); m + 1 < v.size(); ++m)
            if (v[m + 1] > v[m])
                throw Error(ErrorCode::RejectNotMonotone,
                            "h(" + std::to_string(m + 1) + ") > h(" + std::to_string(m) + ")");
        HVector h;
        h.values_ = std::move(v);
        return h;
    }

    static HVector parse(std::initializer_list<Int> seq) {
        return parse(std::span<const Int>(seq.begin(), seq.size()));
    }

    /// h(n), zero outside the support (including negative n).
    Int operator()(Int n) const noexcept {
        return (n < 0 || n >= static_cast<Int>(values_.size())) ? 0 : values_[static_cast<std::size_t>(n)];
    }

    const std::vector<Int>& values() const noexcept { return values_; }
    Int length() const noexcept { return static_cast<Int>(values_.size()); }
    bool empty() const noexcept { return values_.empty(); }

    friend bool operator==(const HVector&, const HVector&) = default;

private:
    std::vector<Int> values_;
};

/// Speciality index e; the empty curve has e = -infinity, kept as its own state.
class Speciality {
public:
    static Speciality neg_infinity() { return Speciality{}; }
    static Speciality of(Int e) { return Speciality{e}; }

    bool is_neg_infinity() const noexcept { return !value_; }
    Int value() const {
        if (!value_) throw Error(ErrorCode::EmptyCurve, "speciality of the empty curve is -infinity");
        return *value_;
    }

    friend bool operator==(const Speciality&, const Speciality&) = default;

private:
    Speciality() = default;
    explicit Speciality(Int e) : value_(e) {}
    std::optional<Int> value_;
};

struct CurveInvariants {
    Int d = 0;
    Int g = 1;
    Int s = 0;
    std::optional<Int> t; // undefined for the empty curve
    Speciality e = Speciality::neg_infinity();

    Int t_value() const {
        if (!t) throw Error(ErrorCode::EmptyCurve, "t is undefined for the empty curve");
        return *t;
    }

    friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

inline CurveInvariants invariants(const HVector& h) {
    CurveInvariants inv;
    if (h.empty()) return inv;

    Checked d = 0, g = 1;
    for (Int n = 0; n < h.length(); ++n) {
        d += h(n);
        g += (Checked{n} - 1) * h(n);
    }
    inv.d = d.get();
    inv.g = g.get();

    Int s = 0;
    while (h(s) >= s + 1) ++s;
    inv.s = s;

    Int t = 0;
    while (!(h(t - 1) > h(t))) ++t;
    inv.t = t;

    inv.e = Speciality::of(h.length() - 1 - 2);
    return inv;
}

/// After any strict drop the sequence keeps dropping strictly until it hits 0.
inline bool is_decreasing_type(const HVector& h) {
    bool dropped = false;
    for (Int n = 0; n < h.length(); ++n) {
        if (dropped && h(n) <= h(n + 1) && h(n) != 0) return false;
        if (h(n) > h(n + 1)) dropped = true;
    }
    return true;
}

enum class SecantTag { CaseA, CaseB, Generic, OutOfScope };

constexpr std::string_view secant_tag_name(SecantTag t) noexcept {
    switch (t) {
    case SecantTag::CaseA: return "A";
    case SecantTag::CaseB: return "B";
    case SecantTag::Generic: return "Generic";
    case SecantTag::OutOfScope: return "OutOfScope";
    }
    return "?";
}

struct SecantCase {
    SecantTag tag = SecantTag::OutOfScope;
    std::optional<Int> l;
    bool unique_pencil = false;

    friend bool operator==(const SecantCase&, const SecantCase&) = default;
};

/// Predicted maximal multisecant order. Case A (a line in the minimal link)
/// is tested first and excludes case B.
inline SecantCase multisecant_case(const HVector& h) {
    const CurveInvariants inv = invariants(h);
    if (inv.s <= 3) return {};
    const Int s = inv.s, t = *inv.t, e = inv.e.value();
    if (h(e + 1) == 3 && h(e + 2) == 2) return {SecantTag::CaseA, e + 3, true};
    if (t > s + 3 && h(t) == s - 2 && h(t + 1) == s - 3) return {SecantTag::CaseB, t - s + 1, true};
    return {SecantTag::Generic, 4, false};
}

/// Largest n with h(n-1) - h(n) > 1, where h vanishes past its support.
/// nullopt when no drop exceeds 1 (complete intersections in particular).
inline std::optional<Int> nollet_bound(const HVector& h) {
    if (h.empty()) throw Error(ErrorCode::EmptyCurve, "Nollet bound needs a non-empty curve");
    for (Int n = h.length(); n >= 1; --n)
        if (h(n - 1) - h(n) > 1) return n;
    return std::nullopt;
}

/// All decreasing-type h-vectors with minimal surface degree exactly s and
/// degree <= d_max, in lexicographic order.
inline std::vector<HVector> enumerate_decreasing_type(Int s, Int d_max) {
    if (s < 1) throw Error(ErrorCode::OutOfRange, "s must be >= 1");
    std::vector<HVector> out;
    std::vector<Int> cur;
    for (Int n = 1; n <= s; ++n) cur.push_back(n);
    const Int base = s * (s + 1) / 2;
    if (base > d_max) return out;

    auto rec = [&](auto&& self, Int d, bool dropped) -> void {
        out.push_back(HVector::parse(cur));
        const Int last = cur.back();
        for (Int v = 1; v <= last; ++v) {
            if (dropped && v == last) continue;
            if (d + v > d_max) break;
            cur.push_back(v);
            self(self, d + v, dropped || v < last);
            cur.pop_back();
        }
    };
    rec(rec, base, false);
    std::sort(out.begin(), out.end(),
              [](const HVector& a, const HVector& b) { return a.values() < b.values(); });
    return out;
}

// Text form: "1,2,3,4,5,3,2"; the empty string is the empty curve.

inline std::vector<Int> parse_int_list(std::string_view text) {
    std::vector<Int> out;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return out;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view tok = trim(text.substr(0, comma));
        Int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw Error(ErrorCode::Syntax, "not an integer: '" + std::string(tok) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

inline HVector parse_hvector_text(std::string_view text) {
    const auto v = parse_int_list(text);
    return HVector::parse(v);
}

inline std::string join_ints(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string format_hvector(const HVector& h) { return join_ints(h.values()); }

} // namespace acm
