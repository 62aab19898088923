#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdnorm/qint.hpp"

namespace rdnorm {

// m = t^2 + r with |r| <= t and r | 4t.
struct RDForm {
    Int t;
    Int r;
    Int m;
};

RDForm make_rd_form(const Int& t, const Int& r);

// Decomposition with t = round(sqrt(m)); empty if m is not of this type.
std::optional<RDForm> rd_classify(const Int& m);

// The four exclusion statements that can be checked by `verify`. Their
// external ids ("2.3" ... "2.6") are part of the command-line interface.
//   plus_one_narrow  m = t^2+1: representable n < 2t are squares.
//   plus_one_wide    m = t^2+1: representable n < 4t+3 are 4t-3, 2t or squares.
//   plus_two         m = t^2+2: representable n < 4t+2 with n, 2n non-square
//                    are 2t+-1, 4t-7 or 4t-2.
//   minus_two        m = t^2-2: solutions with n < 4t+6 are integers times
//                    units or associates of minus_two_generators(t).
enum class Claim { plus_one_narrow, plus_one_wide, plus_two, minus_two };

std::string_view claim_id(Claim c) noexcept;
Claim parse_claim(std::string_view id);
Int claim_radicand(Claim c, const Int& t);
// Smallest t for which the statement is asserted.
long claim_min_t(Claim c) noexcept;

enum class Escape {
    squares,               // n a perfect square
    squares_or_doubled,    // n or 2n a perfect square
    integer_times_unit,    // solution is d * unit (so n = d^2)
};

struct NormClassifier {
    Claim claim;
    Int t;
    Int threshold;            // only n < threshold are constrained
    std::vector<Int> listed;  // explicitly allowed values
    Escape escape;
    bool below_validity_range = false;

    // Value-level test: n >= threshold, listed, or covered by the escape
    // clause. For minus_two the orbit-level test in verify_prop is stricter.
    bool allows(const Int& n) const;
};

NormClassifier allowed_set(Claim c, const Int& t);

// A solution (x, y), y >= 0, of |x^2 - m y^2| = n that the claim excludes.
struct ClaimException {
    Int t;
    Int n;
    Int x;
    Int y;
};

struct VerificationReport {
    Claim claim;
    long t_min = 0;
    long t_max = 0;
    std::uint64_t checked = 0;  // (t, n) pairs examined
    std::vector<ClaimException> exceptions;

    bool clean() const noexcept { return exceptions.empty(); }
};

struct VerifyOptions {
    bool primitive_only = false;
    unsigned threads = 0;  // 0: RDNORM_THREADS or hardware concurrency
};

VerificationReport verify_prop(Claim c, long t_min, long t_max, VerifyOptions opts = {});

// t+-1+-sqrt(m), t+-2+-sqrt(m), 2t-1+-2sqrt(m), 2t+-2+-2sqrt(m) for m = t^2-2.
std::vector<QuadInt> minus_two_generators(const Int& t);

// |a^2 - m| for a = t-1, t, t+1 and m = t^2+1.
std::array<Int, 3> near_root_norms(const Int& t);

struct WitnessCheck {
    std::string name;
    bool ok;
};

// Certificate that Q(sqrt(m)), m = (2lq)^2 + 1, has a non-principal ideal
// above the split prime q.
struct Witness {
    Int l;
    Int q;
    Int t;
    Int m;
    std::vector<WitnessCheck> checks;

    bool valid() const noexcept;
};

Witness class_number_witness(const Int& l, const Int& q);

// Parallelism for sweeps: RDNORM_THREADS if set (must be a positive
// integer), otherwise the hardware concurrency.
unsigned sweep_threads();

}  // namespace rdnorm
