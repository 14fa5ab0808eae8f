#pragma once

// Exhaustive verification of the identities and lower bounds satisfied by
// q(lambda) over all 2^(s-1) s-minimal biliaison types for one value of s.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "biliaison.hpp"
#include "gonality.hpp"
#include "quadform.hpp"

namespace acm {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string witness; // first failure, or a representative instance when passing
};

/// Per-lambda comparison of q against the residue-class lower bound.
struct BoundRecord {
    BiliaisonType lambda;
    Int s = 0;
    Int q = 0;
    Int bound = 0;
    bool pass = true;
};

struct VerificationReport {
    Int s = 0;
    std::vector<CheckResult> checks;
    std::vector<BoundRecord> bounds;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

namespace detail {

class CheckRecorder {
public:
    explicit CheckRecorder(std::string name) { r_.name = std::move(name); }

    void expect(bool ok, const std::string& what) {
        ++r_.cases;
        if (!ok && r_.passed) {
            r_.passed = false;
            r_.witness = what;
        }
    }
    void note(const std::string& what) {
        if (r_.passed && r_.witness.empty()) r_.witness = what;
    }
    CheckResult done() { return std::move(r_); }

private:
    CheckResult r_;
};

inline BiliaisonType slice(const BiliaisonType& lam, std::size_t from, std::size_t to) {
    return BiliaisonType::from(std::vector<Int>(lam.ks().begin() + static_cast<std::ptrdiff_t>(from),
                                                lam.ks().begin() + static_cast<std::ptrdiff_t>(to)));
}

inline BiliaisonType with(const BiliaisonType& lam, std::vector<Int> extra) {
    std::vector<Int> ks = lam.ks();
    ks.insert(ks.end(), extra.begin(), extra.end());
    std::sort(ks.begin(), ks.end());
    return BiliaisonType::from(std::move(ks));
}

inline std::string show(const BiliaisonType& l) { return format_lambda(l); }

} // namespace detail

inline VerificationReport verify_quadform_bounds(Int s) {
    if (s < 4 || s > 12) throw Error(ErrorCode::OutOfRange, "verification runs for 4 <= s <= 12");
    using detail::CheckRecorder;
    using detail::show;

    VerificationReport rep;
    rep.s = s;
    const auto all = enumerate_s_minimal(s);
    const std::string at = " (s=" + std::to_string(s) + ")";

    {
        CheckRecorder c("enumeration_count");
        c.expect(all.size() == (std::size_t{1} << (s - 1)), std::to_string(all.size()) + " types" + at);
        c.expect(enumerate_s_basic(s).size() == all.size(), "s-basic count differs" + at);
        rep.checks.push_back(c.done());
    }
    {
        CheckRecorder c("q_closed_form_vs_phi_of_dg");
        for (const auto& lam : all) {
            const Int q = q_lambda(lam, s);
            const Int phi = lam.empty() ? phi_from_dg(0, 1, s) : [&] {
                const auto inv = lambda_invariants(lam);
                return phi_from_dg(inv.d, inv.g, s);
            }();
            c.expect(q == phi, show(lam) + at);
        }
        rep.checks.push_back(c.done());
    }
    {
        CheckRecorder c("nonnegative_and_zero_only_on_empty");
        for (const auto& lam : all) {
            const Int q = q_lambda(lam, s);
            c.expect(q >= 0 && ((q == 0) == lam.empty()), show(lam) + at);
        }
        rep.checks.push_back(c.done());
    }
    {
        CheckRecorder c("duality");
        for (const auto& lam : all) {
            const auto dual = dual_lambda(lam, s);
            c.expect(q_lambda(dual, s) == q_lambda(lam, s), "q(dual) " + show(lam) + at);
            c.expect(dual_lambda(dual, s) == lam, "involution " + show(lam) + at);
            c.expect(dual.u() == lam.u() && dual.degree() == lam.u() * s - lam.degree(), "degree law " + show(lam) + at);
        }
        rep.checks.push_back(c.done());
    }
    {
        CheckRecorder c("linkage_involution");
        for (const auto& lam : all) {
            const HVector h = h_from_lambda(lam);
            const HVector linked = link_hvector(h, s, s);
            c.expect(link_hvector(linked, s, s) == h, show(lam) + at);
            c.expect(lambda_from_h(h) == lam, "round trip " + show(lam) + at);
        }
        rep.checks.push_back(c.done());
    }
    {
        // (s,s)-linkage takes the s-basic vectors onto the s-minimal types.
        CheckRecorder c("basic_minimal_bijection");
        std::vector<BiliaisonType> images;
        for (const auto& h : enumerate_s_basic(s)) {
            const auto lam = lambda_from_h(link_hvector(h, s, s));
            c.expect(is_s_minimal(lam, s), format_hvector(h) + at);
            c.expect(is_decreasing_type(h), "not decreasing type " + format_hvector(h) + at);
            images.push_back(lam);
        }
        std::sort(images.begin(), images.end(), [](auto& a, auto& b) { return canonical_less(a, b); });
        c.expect(images == all, "image of the s-basic set is not the s-minimal set" + at);
        rep.checks.push_back(c.done());
    }
    {
        CheckRecorder c("recursion_a");
        for (const auto& lam : all)
            for (std::size_t cut = 0; cut <= lam.ks().size(); ++cut) {
                const auto left = detail::slice(lam, 0, cut), right = detail::slice(lam, cut, lam.ks().size());
                c.expect(q_recursion(left, right, s) == q_lambda(lam, s), show(lam) + " cut " + std::to_string(cut) + at);
            }
        rep.checks.push_back(c.done());
    }
    {
        // lambda < (k), (k+1) < mu
        CheckRecorder c("recursion_b");
        for (const auto& lam : all)
            for (std::size_t i = 0; i < lam.ks().size(); ++i) {
                const Int k = lam[i];
                const bool room = (i + 1 == lam.ks().size()) ? k + 1 < s : k + 1 < lam[i + 1];
                if (!room) continue;
                const auto left = detail::slice(lam, 0, i), right = detail::slice(lam, i + 1, lam.ks().size());
                const auto bumped = detail::with(concat(left, right), {k + 1});
                const Int lhs = q_lambda(bumped, s) - q_lambda(lam, s);
                const Int rhs = (s - 1) * (s - 1 - 2 * k) - 2 * (dual_lambda(right, s).degree() - left.degree());
                c.expect(lhs == rhs, show(lam) + " k=" + std::to_string(k) + at);
            }
        rep.checks.push_back(c.done());
    }
    {
        // delta = lambda u (h) u beta u (k) u mu, epsilon moves h down and k up.
        CheckRecorder c("recursion_c");
        for (const auto& lam : all) {
            const auto& ks = lam.ks();
            for (std::size_t i = 0; i < ks.size(); ++i) {
                const bool down = ks[i] - 1 >= 1 && (i == 0 || ks[i] - 1 > ks[i - 1]);
                if (!down) continue;
                for (std::size_t j = i + 1; j < ks.size(); ++j) {
                    const bool up = (j + 1 == ks.size()) ? ks[j] + 1 < s : ks[j] + 1 < ks[j + 1];
                    if (!up) continue;
                    std::vector<Int> moved = ks;
                    --moved[i];
                    ++moved[j];
                    const Int diff = q_lambda(lam, s) - q_lambda(BiliaisonType::from(moved), s);
                    const Int u_beta = static_cast<Int>(j - i - 1);
                    const Int expected = 2 * s * (ks[j] - ks[i] - u_beta);
                    c.expect(diff == expected && diff >= 2 * s, show(lam) + " h=" + std::to_string(ks[i]) +
                                                                    " k=" + std::to_string(ks[j]) + at);
                }
            }
        }
        rep.checks.push_back(c.done());
    }
    {
        CheckRecorder a("w12_a_append_growth");
        CheckRecorder b("w12_b_insert_growth");
        for (const auto& lam : all) {
            const Int q = q_lambda(lam, s);
            for (Int k = 1; k < s; ++k) {
                if (std::find(lam.ks().begin(), lam.ks().end(), k) != lam.ks().end()) continue;
                const Int grown = q_lambda(detail::with(lam, {k}), s);
                if (lam.empty() || k > lam.back())
                    a.expect(grown >= q + k * (s - k) * (s - k), show(lam) + " + " + std::to_string(k) + at);
                b.expect(grown >= q + k * (s - k), show(lam) + " + " + std::to_string(k) + at);
            }
            if (!lam.empty()) a.expect(q >= (s - 1) * (s - 1), "q >= (s-1)^2 " + show(lam) + at);
        }
        rep.checks.push_back(a.done());
        rep.checks.push_back(b.done());
    }
    {
        CheckRecorder c("lbounds_a_two_element_closed_form");
        CheckRecorder edge("lbounds_a_branch_boundary");
        for (Int h = 1; h < s; ++h)
            for (Int k = h + 1; k < s; ++k) {
                const Int f = (h + k) % s;
                const Int head = f * (s - 1) * (s - f);
                const Int low = head + 2 * h * (k - 1) * s, high = head + 2 * (s - k) * (s - h - 1) * s;
                const Int closed = h + k < s ? low : high;
                c.expect(closed == q_lambda(BiliaisonType::from({h, k}), s),
                         "(" + std::to_string(h) + "," + std::to_string(k) + ")" + at);
                if (h + k == s) edge.expect(low == high, "h+k=s at (" + std::to_string(h) + "," + std::to_string(k) + ")" + at);
            }
        rep.checks.push_back(c.done());
        rep.checks.push_back(edge.done());
    }
    if (s >= 5) {
        CheckRecorder m("m_f_s_closed_vs_brute");
        CheckRecorder b("lbounds_b_three_or_more");
        for (Int f = 0; f < s; ++f) {
            const auto closed = m_f_s(f, s), brute = m_f_s_brute(f, s);
            m.expect(closed.value == brute.value, "f=" + std::to_string(f) + at);
            for (const auto& l : closed.attained_by)
                m.expect(q_lambda(l, s) == closed.value, "minimizer " + show(l) + at);
            if (f == 2) m.note("m(2," + std::to_string(s) + ")=" + std::to_string(closed.value));
        }
        for (const auto& lam : all) {
            if (lam.u() < 3) continue;
            b.expect(q_lambda(lam, s) >= 2 * s + m_f_s(lam.degree() % s, s).value, show(lam) + at);
        }
        rep.checks.push_back(m.done());
        rep.checks.push_back(b.done());
    }
    {
        CheckRecorder c("cbounds_by_residue");
        for (const auto& lam : all) {
            if (lam.u() < 2) continue;
            const Int q = q_lambda(lam, s), bound = cbound(lam.degree() % s, s);
            rep.bounds.push_back({lam, s, q, bound, q >= bound});
            c.expect(q >= bound, show(lam) + at);
        }
        rep.checks.push_back(c.done());
    }
    {
        CheckRecorder c("s1bound_small_q");
        const auto small = small_q_classification(s);
        std::vector<BiliaisonType> found;
        for (const auto& e : small) found.push_back(e.lambda);
        if (s >= 5) c.expect(found == small_q_catalogue(s), "small-q set differs from the catalogue" + at);
        const Int lo = (s - 1) * (s - 1), mid = s * s;
        const auto one = BiliaisonType::from({1}), last = BiliaisonType::from({s - 1});
        for (const auto& e : small) {
            if (e.q <= lo) {
                c.expect(e.lambda.empty() || e.lambda == one || e.lambda == last, "q <= (s-1)^2 " + show(e.lambda) + at);
            } else if (e.q <= mid) {
                const bool ok = (s == 4 && (e.lambda == BiliaisonType::from({2}) || e.lambda == BiliaisonType::from({1, 3}))) ||
                                (s == 5 && (e.lambda == BiliaisonType::from({2}) || e.lambda == BiliaisonType::from({3})));
                c.expect(ok, "(s-1)^2 < q <= s^2 " + show(e.lambda) + at);
            }
        }
        std::string listing;
        for (const auto& e : small) listing += show(e.lambda) + "=" + std::to_string(e.q) + " ";
        c.note(listing);
        rep.checks.push_back(c.done());
    }
    {
        CheckRecorder c("component_bound_q_gt_2b");
        for (const auto& lam : all) {
            if (lam.empty()) continue;
            const auto dec = gap_decomposition(lam);
            const std::size_t r = dec.r();
            for (std::size_t i = 0; i < r; ++i) {
                Int b = 0;
                for (std::size_t j = 0; j < r; ++j) {
                    if (j == i) continue;
                    const auto& lo_piece = dec.pieces[std::min(i, j)].lambda;
                    const auto& hi_piece = dec.pieces[std::max(i, j)].lambda;
                    const Int phi = phi_cross(lo_piece, hi_piece, s);
                    c.expect(phi < 0, "phi_ij < 0 in " + show(lam) + at);
                    b -= phi;
                }
                c.expect(q_lambda(dec.pieces[i].lambda, s) > 2 * b, show(lam) + " piece " + std::to_string(i) + at);
            }
        }
        rep.checks.push_back(c.done());
    }
    {
        CheckRecorder c("complete_intersection_examples");
        for (Int a = 1; a < s; ++a)
            for (Int b = a; b < s; ++b) {
                const auto h = ci_hvector(a, b);
                const auto inv = invariants(h);
                const Int expected = a * b * (s - a) * (s - b);
                const std::string tag = "ci(" + std::to_string(a) + "," + std::to_string(b) + ")" + at;
                c.expect(phi_from_dg(inv.d, inv.g, s) == expected, tag);
                const auto lam = lambda_from_h(h);
                if (is_s_minimal(lam, s)) c.expect(q_lambda(lam, s) == expected, "lambda of " + tag);
            }
        for (Int k = 1; k < s; ++k) {
            std::vector<Int> ks;
            for (Int i = 1; i <= k; ++i) ks.push_back(i);
            const auto lam = BiliaisonType::from(ks);
            const Int d = k * (k + 1) / 2;
            // 3q = d(3s^2 - 2s(2k+1) + 3d)
            c.expect(3 * q_lambda(lam, s) == d * (3 * s * s - 2 * s * (2 * k + 1) + 3 * d), show(lam) + at);
        }
        rep.checks.push_back(c.done());
    }
    return rep;
}

} // namespace acm
