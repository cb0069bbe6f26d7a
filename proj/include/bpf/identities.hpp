#ifndef BPF_IDENTITIES_HPP
#define BPF_IDENTITIES_HPP

#include "bpf/hyperseq.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bpf {

/// A closed-form side that should have been rational carried a sqrt(D) part.
class NonrationalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One exact comparison of a brute-force left-hand side against a closed-form
/// right-hand side.
///
/// `hypothesis` records whether the inputs satisfy the hypothesis printed
/// with the identity; `gating` whether a mismatch counts as a verification
/// failure. They differ only for exploratory checks (e.g. the octonion
/// Catalan parity map).
struct IdentityReport {
    std::string identity;
    Params params;
    std::map<std::string, long> indices;
    nlohmann::json lhs;
    nlohmann::json rhs;
    bool equal = false;
    bool hypothesis = true;
    bool gating = true;
    std::optional<std::string> note;

    void add_note(const std::string& text);
};

/// 2x2 matrix of rational quaternions; products keep the left factor's
/// entries on the left.
struct QuatMatrix2 {
    std::array<std::array<Quaternion<Rational>, 2>, 2> e;

    static QuatMatrix2 identity();
    /// Scalars embedded as quaternions with zero imaginary part.
    static QuatMatrix2 scalar(const Rational& m00, const Rational& m01, const Rational& m10,
                              const Rational& m11);

    friend QuatMatrix2 operator*(const QuatMatrix2& l, const QuatMatrix2& r);
    friend bool operator==(const QuatMatrix2& l, const QuatMatrix2& r);
};

QuatMatrix2 matrix_power(const QuatMatrix2& m, long exponent);

/// Order of the two star factors in the Catalan bracket. `Printed` is the
/// order of the identity; `Commuted` swaps them and exists to show that
/// the order matters.
enum class FactorOrder { Printed, Commuted };

/// Differential verifier for one parameter set. Left-hand sides come only
/// from recurrence-backed W/OW values; right-hand sides only from the
/// closed-form constants (or, where the identity is stated that way, from
/// the initial terms). Not thread-safe; use one checker per thread.
class IdentityChecker {
public:
    explicit IdentityChecker(const Params& params);

    [[nodiscard]] const Params& params() const { return w_.params(); }
    [[nodiscard]] const ClosedForm& closed_form() const { return cf_; }
    SequenceEngine& engine() { return w_; }

    /// W_{n-r} W_{n+r} - W_n^2. Requires r even and 0 <= r <= n.
    IdentityReport catalan_quat(long n, long r);
    /// r = 2 Catalan for n >= 0; odd n is evaluated with a note.
    IdentityReport cassini_quat(long n);
    /// Even-index matrix representation, n >= 1.
    IdentityReport matrix_rep(long n);
    /// W_{2(n-1)} W_{2(n+1)} - W_{2n}^2 = W_0 W_4 - W_2^2, n >= 1.
    IdentityReport cassini_even(long n);
    /// W_{2(n+1)} Q_{2n} - W_{2n} Q_{2(n+1)}, n >= 0.
    IdentityReport mixed_relation_quat(long n);
    /// Nr(W_n) = T(n) + T(n+1), n >= 0.
    IdentityReport norm_formula(long n);
    /// Partial sums of W_r, W_{2r}, W_{2r+1} for r < n, n >= 1.
    std::array<IdentityReport, 3> sums_quat(long n);

    /// Octonion Catalan for any parity of r, 0 <= r <= n. Never gating; the
    /// printed hypothesis (odd r) is recorded in `hypothesis`.
    IdentityReport catalan_oct(long n, long r);
    IdentityReport mixed_relation_oct(long n);
    std::array<IdentityReport, 3> sums_oct(long n);

    /// Closed-form Catalan right-hand side before the rationality check.
    template <std::size_t N>
    Hypercomplex<QuadraticElement, N> catalan_rhs(long n, long r,
                                                  FactorOrder order = FactorOrder::Printed) const;

private:
    template <std::size_t N>
    IdentityReport catalan(const std::string& name, long n, long r, bool hypothesis, bool gating);
    template <std::size_t N>
    IdentityReport mixed_relation(const std::string& name, long n);
    template <std::size_t N>
    std::array<IdentityReport, 3> sums(const std::string& prefix, long n);

    IdentityReport make_report(const std::string& name, std::map<std::string, long> indices) const;
    template <std::size_t N>
    void finish(IdentityReport& report, const Hypercomplex<Rational, N>& lhs,
                const Hypercomplex<QuadraticElement, N>& rhs) const;

    SequenceEngine w_;
    SequenceEngine q_;
    ClosedForm cf_;
};

IdentityReport catalan_quat(long n, long r, const Params& params);
IdentityReport cassini_quat(long n, const Params& params);
IdentityReport matrix_rep(long n, const Params& params);
IdentityReport cassini_even(long n, const Params& params);
IdentityReport mixed_relation_quat(long n, const Params& params);
IdentityReport norm_formula(long n, const Params& params);
std::array<IdentityReport, 3> sums_quat(long n, const Params& params);
IdentityReport catalan_oct(long n, long r, const Params& params);
IdentityReport mixed_relation_oct(long n, const Params& params);
std::array<IdentityReport, 3> sums_oct(long n, const Params& params);

/// One row of the octonion Catalan parity map: how many (n, r) instances
/// with r of the given parity satisfied the closed form for one grid point.
struct ParityMapRow {
    std::size_t grid_index;
    Params params;
    bool r_odd;
    long checks;
    long equal;
};

/// Evaluates octonion Catalan for every 0 <= r <= n <= n_max on each grid
/// point and tallies equality per parity of r. Deterministic: rows are
/// ordered by grid index, then even before odd.
std::vector<ParityMapRow> octonion_catalan_parity_map(const std::vector<Params>& grid, long n_max);

}  // namespace bpf

#endif  // BPF_IDENTITIES_HPP
