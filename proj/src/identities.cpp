#include "bpf/identities.hpp"

#include "bpf/serialize.hpp"

namespace bpf {

namespace {

const char* const kOutsidePositive = "outside positive-parameter setting";

template <std::size_t N>
Hypercomplex<Rational, N> sum_range(SequenceEngine& engine, long count, long stride, long offset) {
    auto total = Hypercomplex<Rational, N>::zero(Rational(0));
    for (long r = 0; r < count; ++r) {
        total += lift_sequence<N>(stride * r + offset, engine);
    }
    return total;
}

}  // namespace

void IdentityReport::add_note(const std::string& text) {
    note = note ? *note + "; " + text : text;
}

QuatMatrix2 QuatMatrix2::identity() { return scalar(Rational(1), Rational(0), Rational(0), Rational(1)); }

QuatMatrix2 QuatMatrix2::scalar(const Rational& m00, const Rational& m01, const Rational& m10,
                                const Rational& m11) {
    using Q = Quaternion<Rational>;
    return QuatMatrix2{{{{Q::basis(0, m00), Q::basis(0, m01)}, {Q::basis(0, m10), Q::basis(0, m11)}}}};
}

QuatMatrix2 operator*(const QuatMatrix2& l, const QuatMatrix2& r) {
    QuatMatrix2 out = QuatMatrix2::scalar(Rational(0), Rational(0), Rational(0), Rational(0));
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out.e[i][j] = l.e[i][0] * r.e[0][j] + l.e[i][1] * r.e[1][j];
        }
    }
    return out;
}

bool operator==(const QuatMatrix2& l, const QuatMatrix2& r) {
    return l.e[0][0] == r.e[0][0] && l.e[0][1] == r.e[0][1] && l.e[1][0] == r.e[1][0] &&
           l.e[1][1] == r.e[1][1];
}

QuatMatrix2 matrix_power(const QuatMatrix2& m, long exponent) {
    if (exponent < 0) {
        throw std::invalid_argument("matrix_power requires a nonnegative exponent");
    }
    QuatMatrix2 out = QuatMatrix2::identity();
    for (long i = 0; i < exponent; ++i) {
        out = out * m;
    }
    return out;
}

IdentityChecker::IdentityChecker(const Params& params)
    : w_(params), q_(fibonacci_params(params.a(), params.b())), cf_(params) {}

IdentityReport IdentityChecker::make_report(const std::string& name,
                                            std::map<std::string, long> indices) const {
    IdentityReport report{name, params(), std::move(indices), {}, {}, false, true, true, std::nullopt};
    if (!params().positive_setting()) {
        report.add_note(kOutsidePositive);
    }
    return report;
}

template <std::size_t N>
void IdentityChecker::finish(IdentityReport& report, const Hypercomplex<Rational, N>& lhs,
                             const Hypercomplex<QuadraticElement, N>& rhs) const {
    report.lhs = to_json(lhs);
    if (auto r = rational_part(rhs)) {
        report.rhs = to_json(*r);
        report.equal = lhs == *r;
        return;
    }
    report.rhs = to_json(rhs);
    if (report.gating) {
        throw NonrationalError("nonrational RHS");
    }
    report.equal = false;
    report.add_note("nonrational RHS");
}

template <std::size_t N>
Hypercomplex<QuadraticElement, N> IdentityChecker::catalan_rhs(long n, long r,
                                                               FactorOrder order) const {
    const StarConstants<N>& s = cf_.stars<N>();
    const bool even = zeta(n) == 0;
    const auto& x = even ? s.alpha_star : s.alpha_dstar;
    const auto& y = even ? s.beta_star : s.beta_dstar;
    const QuadraticElement ar = cf_.roots.alpha_pow(r);
    const QuadraticElement br = cf_.roots.beta_pow(r);
    const QuadraticElement root_product = cf_.roots.alpha * cf_.roots.beta;
    const QuadraticElement coef = cf_.constants.A * cf_.constants.B * (ar - br) *
                                  quad_inv(pow(root_product, even ? r + 1 : r));
    const auto xy = order == FactorOrder::Printed ? x * y : y * x;
    const auto yx = order == FactorOrder::Printed ? y * x : x * y;
    return hc_scale(coef, hc_scale(br, xy) - hc_scale(ar, yx));
}

template Hypercomplex<QuadraticElement, 4> IdentityChecker::catalan_rhs<4>(long, long,
                                                                           FactorOrder) const;
template Hypercomplex<QuadraticElement, 8> IdentityChecker::catalan_rhs<8>(long, long,
                                                                           FactorOrder) const;

template <std::size_t N>
IdentityReport IdentityChecker::catalan(const std::string& name, long n, long r, bool hypothesis,
                                        bool gating) {
    IdentityReport report = make_report(name, {{"n", n}, {"r", r}});
    report.hypothesis = hypothesis;
    report.gating = gating;
    const auto lhs = lift_sequence<N>(n - r, w_) * lift_sequence<N>(n + r, w_) -
                     lift_sequence<N>(n, w_) * lift_sequence<N>(n, w_);
    finish(report, lhs, catalan_rhs<N>(n, r));
    return report;
}

IdentityReport IdentityChecker::catalan_quat(long n, long r) {
    if (r < 0 || r > n || zeta(r) != 0) {
        throw std::invalid_argument("catalan_quat requires even r with 0 <= r <= n");
    }
    return catalan<4>("catalan_quat", n, r, true, true);
}

IdentityReport IdentityChecker::catalan_oct(long n, long r) {
    if (r < 0 || r > n) {
        throw std::invalid_argument("catalan_oct requires 0 <= r <= n");
    }
    const bool odd = zeta(r) == 1;
    IdentityReport report = catalan<8>("catalan_oct", n, r, odd, false);
    report.add_note(odd ? "exploratory: r odd (printed octonion hypothesis)"
                        : "exploratory: r even (quaternion pattern)");
    return report;
}

IdentityReport IdentityChecker::cassini_quat(long n) {
    if (n < 0) {
        throw std::invalid_argument("cassini_quat requires n >= 0");
    }
    const bool even = zeta(n) == 0;
    IdentityReport report = make_report("cassini_quat", {{"n", n}});
    report.hypothesis = even;
    report.gating = even;
    if (!even) {
        report.add_note("outside corollary hypothesis");
    }
    const auto lhs = W(n - 2, w_) * W(n + 2, w_) - W(n, w_) * W(n, w_);
    // Right-hand side of the even-n form, used for every n.
    finish(report, lhs, catalan_rhs<4>(0, 2));
    return report;
}

IdentityReport IdentityChecker::matrix_rep(long n) {
    if (n < 1) {
        throw std::invalid_argument("matrix_rep requires n >= 1");
    }
    IdentityReport report = make_report("matrix_rep", {{"n", n}});
    const QuatMatrix2 lhs{{{{W(2 * n, w_), W(2 * (n - 1), w_)}, {W(2 * (n + 1), w_), W(2 * n, w_)}}}};
    const QuatMatrix2 base{{{{W(2, w_), W(0, w_)}, {W(4, w_), W(2, w_)}}}};
    const QuatMatrix2 step =
        QuatMatrix2::scalar(params().ab() + Rational(2), Rational(1), Rational(-1), Rational(0));
    const QuatMatrix2 rhs = base * matrix_power(step, n - 1);
    report.lhs = to_json(lhs);
    report.rhs = to_json(rhs);
    report.equal = lhs == rhs;
    return report;
}

IdentityReport IdentityChecker::cassini_even(long n) {
    if (n < 1) {
        throw std::invalid_argument("cassini_even requires n >= 1");
    }
    IdentityReport report = make_report("cassini_even", {{"n", n}});
    const auto lhs = W(2 * (n - 1), w_) * W(2 * (n + 1), w_) - W(2 * n, w_) * W(2 * n, w_);
    const auto rhs = W(0, w_) * W(4, w_) - W(2, w_) * W(2, w_);
    report.lhs = to_json(lhs);
    report.rhs = to_json(rhs);
    report.equal = lhs == rhs;
    return report;
}

template <std::size_t N>
IdentityReport IdentityChecker::mixed_relation(const std::string& name, long n) {
    if (n < 0) {
        throw std::invalid_argument(name + " requires n >= 0");
    }
    IdentityReport report = make_report(name, {{"n", n}});
    const auto lhs = lift_sequence<N>(2 * (n + 1), w_) * lift_sequence<N>(2 * n, q_) -
                     lift_sequence<N>(2 * n, w_) * lift_sequence<N>(2 * (n + 1), q_);
    const StarConstants<N>& s = cf_.stars<N>();
    const auto& k = cf_.constants;
    const auto& rt = cf_.roots;
    const auto rhs = hc_scale(rt.ab.inverse(), hc_scale(k.A * rt.beta, s.alpha_star * s.beta_star) -
                                                   hc_scale(k.B * rt.alpha, s.beta_star * s.alpha_star));
    finish(report, lhs, rhs);
    return report;
}

IdentityReport IdentityChecker::mixed_relation_quat(long n) {
    return mixed_relation<4>("mixed_relation_quat", n);
}

IdentityReport IdentityChecker::mixed_relation_oct(long n) {
    return mixed_relation<8>("mixed_relation_oct", n);
}

IdentityReport IdentityChecker::norm_formula(long n) {
    if (n < 0) {
        throw std::invalid_argument("norm_formula requires n >= 0");
    }
    IdentityReport report = make_report("norm_formula", {{"n", n}});
    const Rational lhs = hc_norm(W(n, w_));

    const auto& rt = cf_.roots;
    const Params& p = params();
    const QuadraticElement root_product = rt.alpha * rt.beta;
    const QuadraticElement rp2 = root_product * root_product;
    const QuadraticElement diff = rt.alpha - rt.beta;
    const QuadraticElement alpha_tail = rt.alpha_pow(4) + rp2;
    const QuadraticElement beta_tail = rt.beta_pow(4) + rp2;
    const auto term = [&](long k) {
        const QuadraticElement x = rt.alpha_pow(2 * k) * alpha_tail + rt.beta_pow(2 * k) * beta_tail -
                                   pow(root_product, k + 2) * Rational(4);
        const QuadraticElement y = rt.alpha_pow(2 * k - 1) * alpha_tail +
                                   rt.beta_pow(2 * k - 1) * beta_tail +
                                   pow(root_product, k + 2) * Rational(2);
        const QuadraticElement z = rt.alpha_pow(2 * k - 2) * alpha_tail +
                                   rt.beta_pow(2 * k - 2) * beta_tail -
                                   pow(root_product, k + 1) * Rational(4);
        const QuadraticElement denom = cf_.embed(p.ab().pow(k - zeta(k))) * rp2 * diff * diff;
        const QuadraticElement bracket = x * (p.w1() * p.w1()) +
                                         y * (Rational(2) * p.w0() * p.w1() * p.b()) +
                                         z * (p.w0() * p.w0() * p.b() * p.b());
        return bracket * p.a().pow(2 * zeta(k + 1)) * quad_inv(denom);
    };
    const QuadraticElement rhs = term(n) + term(n + 1);

    report.lhs = to_json(lhs);
    report.rhs = to_json(rhs);
    if (!rhs.is_rational()) {
        throw NonrationalError("nonrational RHS");
    }
    report.rhs = to_json(rhs.x());
    report.equal = lhs == rhs.x();
    return report;
}

template <std::size_t N>
std::array<IdentityReport, 3> IdentityChecker::sums(const std::string& prefix, long n) {
    if (n < 1) {
        throw std::invalid_argument(prefix + " requires n >= 1");
    }
    const StarConstants<N>& s = cf_.stars<N>();
    const auto& k = cf_.constants;
    const auto& rt = cf_.roots;
    const Rational inv_ab = rt.ab.inverse();
    const auto lifted = [&](long m) { return lift(lift_sequence<N>(m, w_), cf_.context); };

    // A S* beta^2 - B S*_beta alpha^2 and A S** beta - B S**_beta alpha.
    const auto star_term = hc_scale(k.A * rt.beta_pow(2), s.alpha_star) -
                           hc_scale(k.B * rt.alpha_pow(2), s.beta_star);
    const auto dstar_term =
        hc_scale(k.A * rt.beta, s.alpha_dstar) - hc_scale(k.B * rt.alpha, s.beta_dstar);

    IdentityReport all = make_report(prefix + "_i", {{"n", n}});
    const auto rhs_all =
        hc_scale(inv_ab, lifted(n) - lifted(n - 2) + lifted(n + 1) - lifted(n - 1)) -
        hc_scale(inv_ab * inv_ab, star_term - hc_scale(rt.ab, dstar_term));
    finish(all, sum_range<N>(w_, n, 1, 0), rhs_all);

    IdentityReport even = make_report(prefix + "_ii", {{"n", n}});
    const auto rhs_even = hc_scale(inv_ab, lifted(2 * n) - lifted(2 * n - 2)) -
                          hc_scale(inv_ab * inv_ab, star_term);
    finish(even, sum_range<N>(w_, n, 2, 0), rhs_even);

    IdentityReport odd = make_report(prefix + "_iii", {{"n", n}});
    const auto rhs_odd =
        hc_scale(inv_ab, lifted(2 * n + 1) - lifted(2 * n - 1)) + hc_scale(inv_ab, dstar_term);
    finish(odd, sum_range<N>(w_, n, 2, 1), rhs_odd);

    return {std::move(all), std::move(even), std::move(odd)};
}

std::array<IdentityReport, 3> IdentityChecker::sums_quat(long n) { return sums<4>("sums_quat", n); }

std::array<IdentityReport, 3> IdentityChecker::sums_oct(long n) { return sums<8>("sums_oct", n); }

IdentityReport catalan_quat(long n, long r, const Params& params) {
    return IdentityChecker(params).catalan_quat(n, r);
}
IdentityReport cassini_quat(long n, const Params& params) {
    return IdentityChecker(params).cassini_quat(n);
}
IdentityReport matrix_rep(long n, const Params& params) { return IdentityChecker(params).matrix_rep(n); }
IdentityReport cassini_even(long n, const Params& params) {
    return IdentityChecker(params).cassini_even(n);
}
IdentityReport mixed_relation_quat(long n, const Params& params) {
    return IdentityChecker(params).mixed_relation_quat(n);
}
IdentityReport norm_formula(long n, const Params& params) {
    return IdentityChecker(params).norm_formula(n);
}
std::array<IdentityReport, 3> sums_quat(long n, const Params& params) {
    return IdentityChecker(params).sums_quat(n);
}
IdentityReport catalan_oct(long n, long r, const Params& params) {
    return IdentityChecker(params).catalan_oct(n, r);
}
IdentityReport mixed_relation_oct(long n, const Params& params) {
    return IdentityChecker(params).mixed_relation_oct(n);
}
std::array<IdentityReport, 3> sums_oct(long n, const Params& params) {
    return IdentityChecker(params).sums_oct(n);
}

std::vector<ParityMapRow> octonion_catalan_parity_map(const std::vector<Params>& grid, long n_max) {
    std::vector<ParityMapRow> rows;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        IdentityChecker checker(grid[g]);
        ParityMapRow even{g, grid[g], false, 0, 0};
        ParityMapRow odd{g, grid[g], true, 0, 0};
        for (long n = 0; n <= n_max; ++n) {
            for (long r = 0; r <= n; ++r) {
                ParityMapRow& row = zeta(r) == 1 ? odd : even;
                ++row.checks;
                if (checker.catalan_oct(n, r).equal) {
                    ++row.equal;
                }
            }
        }
        rows.push_back(std::move(even));
        rows.push_back(std::move(odd));
    }
    return rows;
}

}  // namespace bpf
