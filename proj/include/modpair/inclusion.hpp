#pragma once

#include "modpair/phases.hpp"
#include "modpair/power.hpp"
#include "modpair/schrodinger.hpp"

#include <optional>

namespace modpair {

// Blaschke zero with a signed exponent: +1 for a factor, -1 for its conjugate.
struct ZeroFactor {
    cplx zero;
    int power = 0;
};

// phi = e^{i theta-shift} * prod b_w^{n_w} * e^{i p sinh(lambda/2)}
struct Factorization {
    double shift_t = 0.0; // phi(ln Delta) contains Delta^{i shift_t}
    std::vector<ZeroFactor> zeros;
    int sinh_power = 0;

    bool trivial_rest() const { return zeros.empty() && sinh_power == 0; }
};

Factorization factorize(const BoundaryPhase& phi);
// factors of phi1 * conj(phi2), equal zeros merged
Factorization relative(const Factorization& a, const Factorization& b);

struct Pole {
    cplx lambda;          // location on the discrete dual axis
    int multiplicity = 1;
};

// Poles of the warped multiplier: side < 0 gives Im < 0 (left tails), side > 0 gives Im > 0.
std::vector<Pole> multiplier_poles(const Factorization& f, const GridSpec& work, int side);

// Standard pair (H0, U_phi) on a widened work circle.  The exp/scaling part of phi is
// absorbed into the generator scale kappa = e^{-2 pi shift_t}; the rest acts as the
// lambda-multiplier Mt, so U_phi(s) = Mt U0(kappa s) Mt*.
class StandardPairModel {
public:
    StandardPairModel(BoundaryPhase phi, const GridSpec& grid, std::size_t pad = 0);

    const BoundaryPhase& phase() const { return phi_; }
    const GridSpec& grid() const { return grid_; }
    const GridSpec& work() const { return work_; }
    std::size_t pad() const { return pad_; }
    double kappa() const { return kappa_; }
    // sinh factors are continued linearly beyond this argument so their delay fits the circle
    double sinh_cap() const { return sinh_cap_; }
    const Factorization& factors() const { return fact_; }

    // physical-grid vectors are embedded; work-grid vectors pass through
    WaveFunction lift(const WaveFunction& psi) const;
    WaveFunction restrict_to_grid(const WaveFunction& v) const;

    WaveFunction apply_rest(const WaveFunction& v, bool adjoint) const;
    WaveFunction apply_U(double s, const WaveFunction& psi) const;
    WaveFunction spectral_projection(Interval iv, const WaveFunction& psi) const;
    WaveFunction semigroup(double y, Semigroup dir, const WaveFunction& psi, double cutoff) const;
    WaveFunction generator(const WaveFunction& psi) const;

    // symbol of Mt on the work grid
    const cvec& symbol() const { return symbol_; }

private:
    BoundaryPhase phi_;
    GridSpec grid_;
    GridSpec work_;
    std::size_t pad_ = 1;
    Factorization fact_;
    double kappa_ = 1.0;
    double sinh_cap_ = 700.0;
    cvec symbol_;
};

// smallest power-of-two pad that damps Blaschke tails around the circle below roundoff
std::size_t default_pad(const BoundaryPhase& phi, const GridSpec& grid);

WaveFunction pair_apply_U(const StandardPairModel& pair, double s, const WaveFunction& psi);
WaveFunction pair_spectral_projection(const StandardPairModel& pair, Interval iv,
                                      const WaveFunction& psi);

// Real combination b0 + sum a_i b_i whose transforms T b vanish (with moments) at the poles.
WaveFunction tail_cancelled(const std::vector<WaveFunction>& basis,
                            const std::vector<WaveFunction>& transformed,
                            const std::vector<Pole>& poles, bool real_coefficients);

// H0 elements with closed-form transforms s e^{pi l/2 - s^2 l^2/2 - i l c}
WaveFunction closed_form_H0(const GridSpec& g, double c, double s);

NormEstimate spectral_inclusion_defect(const StandardPairModel& p1, const StandardPairModel& p2,
                                       const SpectralOptions& opt = {});
double membership_inclusion_defect(const StandardPairModel& p1, const StandardPairModel& p2,
                                   std::size_t samples, std::uint64_t seed,
                                   const MembershipOptions& mopt = {});
BoundaryPhase relative_phase(const StandardPairModel& p1, const StandardPairModel& p2);

enum class Answer { yes, no, indeterminate };
const char* to_string(Answer a);

struct Tolerances {
    double spectral = 1e-3;
    double membership = 1e-6;
    double leakage = 1e-3;
};

// true: d(N) <= tol and shrinking (or below 1e-3 tol); false: > 10 tol twice, stable within 2x
Answer trend_verdict(double coarse, double fine, double tol);

struct InclusionConfig {
    Tolerances tol;
    std::size_t samples = 4;
    std::size_t inner_probes = 8;
    std::uint64_t seed = 7;
    SpectralOptions spectral;
};

struct InclusionVerdict {
    double spectral_defect = 0.0, spectral_defect_fine = 0.0;
    double membership_defect = 0.0, membership_defect_fine = 0.0;
    double relative_phase_leakage = 0.0, relative_phase_leakage_fine = 0.0;
    bool spectral_converged = true;
    Answer spectral = Answer::indeterminate;
    Answer membership = Answer::indeterminate;
    Answer inner = Answer::indeterminate;
    bool agreement = false;
    Answer verdict = Answer::indeterminate;
};

// the three detectors at a single resolution, on a shared work circle
struct DetectorValues {
    NormEstimate spectral;
    double membership = 0.0;
    double leakage = 0.0;
};
DetectorValues inclusion_defects(const BoundaryPhase& phi1, const BoundaryPhase& phi2,
                                 const GridSpec& grid, const InclusionConfig& cfg = {});

// runs all detectors at grid.N and 2 grid.N
InclusionVerdict check_inclusion(const BoundaryPhase& phi1, const BoundaryPhase& phi2,
                                 const GridSpec& grid, const InclusionConfig& cfg = {});

// ||E2[(a2,b2)] E1[(a1,b1)]|| by power iteration; allow_overlap skips the ordering check
NormEstimate orthogonality_defect(const StandardPairModel& p1, const StandardPairModel& p2,
                                  Interval i1, Interval i2, bool allow_overlap = false,
                                  const SpectralOptions& opt = {});

// max over probes of ||e^{y P2} E2[(0, cutoff)] e^{-y P1} psi|| / ||psi||; probes pre-projected
double contraction_ratio(const StandardPairModel& p1, const StandardPairModel& p2, double y,
                         double cutoff, const std::vector<WaveFunction>& probes);

// Probe with transform prod (z - r) s e^{-s^2 (z - k)^2 / 2 - i z c}, evaluable off the axis.
struct AnalyticProbe {
    double c = 0.0;
    double s = 1.0;
    double k = 0.0;
    std::vector<cplx> roots;

    cplx transform(cplx z) const;
};

// <psi, P1 psi> - <psi, P2 psi> for the unit-normalized probe, by the strip formula
double generator_form_gap(const StandardPairModel& p1, const StandardPairModel& p2,
                          const AnalyticProbe& probe);
double generator_form(const StandardPairModel& p, const AnalyticProbe& probe);
// probe roots needed so that the pair's generator form is finite
std::vector<cplx> form_domain_roots(const BoundaryPhase& phi);

double wiesbrock_cocycle_residual(const StandardPairModel& pair, double t, const WaveFunction& psi);
// Gaussian probes suited to the pair: tails cancelled at the poles of Mt*, dressed by its sinh part
std::vector<WaveFunction> pair_probes(const StandardPairModel& pair, std::size_t count,
                                      std::uint64_t seed);

} // namespace modpair
