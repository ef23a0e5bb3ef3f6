#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace modpair {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// Violated preconditions and unrepresentable requests.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Picture { theta, lambda };

// theta_j = -L + j h, lambda_k = (k - N/2) dlambda, h = 2L/N, dlambda = pi/L.
struct GridSpec {
    double L = 30.0;
    std::size_t N = 4096;
    Picture picture = Picture::theta;

    double h() const { return 2.0 * L / static_cast<double>(N); }
    double dual_spacing() const { return pi / L; }
    double theta(std::size_t j) const { return -L + static_cast<double>(j) * h(); }
    double lambda(std::size_t k) const
    {
        return (static_cast<double>(k) - static_cast<double>(N / 2)) * dual_spacing();
    }
    double point(std::size_t i) const { return picture == Picture::theta ? theta(i) : lambda(i); }
    // quadrature weight of the current picture
    double weight() const { return picture == Picture::theta ? h() : dual_spacing(); }
    GridSpec dual() const
    {
        return {L, N, picture == Picture::theta ? Picture::lambda : Picture::theta};
    }
    GridSpec in(Picture p) const { return {L, N, p}; }
    void validate() const;

    bool same_lattice(const GridSpec& o) const { return L == o.L && N == o.N; }
    bool operator==(const GridSpec& o) const = default;
};

GridSpec make_grid(double L, std::size_t N, Picture p = Picture::theta);

struct WaveFunction {
    GridSpec grid;
    cvec values;

    WaveFunction() = default;
    explicit WaveFunction(const GridSpec& g) : grid(g), values(g.N) {}
    WaveFunction(const GridSpec& g, cvec v);

    std::size_t size() const { return values.size(); }
    cplx& operator[](std::size_t i) { return values[i]; }
    const cplx& operator[](std::size_t i) const { return values[i]; }
    double norm() const;
};

cplx inner_product(const WaveFunction& f, const WaveFunction& g);
double distance(const WaveFunction& f, const WaveFunction& g);
// ||f - g|| / ||g||, or the absolute distance when g = 0
double relative_distance(const WaveFunction& f, const WaveFunction& g);

WaveFunction operator+(const WaveFunction& a, const WaveFunction& b);
WaveFunction operator-(const WaveFunction& a, const WaveFunction& b);
WaveFunction operator*(cplx c, const WaveFunction& a);
WaveFunction normalized(const WaveFunction& f);

WaveFunction fourier(const WaveFunction& f);
WaveFunction inverse_fourier(const WaveFunction& f);
WaveFunction to_picture(const WaveFunction& f, Picture p);

// Periodic lambda-multiplier; input and output keep their picture.
WaveFunction apply_multiplier(const WaveFunction& f, const std::function<cplx(double)>& symbol);

// Zero-extend onto a grid with the same spacing and P times the width, and back.
GridSpec widened(const GridSpec& g, std::size_t P);
WaveFunction embed(const WaveFunction& f, const GridSpec& big);
WaveFunction crop(const WaveFunction& f, const GridSpec& small);

// pointwise multiplication in the theta-picture
WaveFunction multiply_theta(const WaveFunction& f, const std::function<cplx(double)>& m);
// relative L2 mass of a theta-picture vector on [a, b)
double mass_fraction(const WaveFunction& f, double a, double b);
// relative L2 mass of a lambda-picture view outside |lambda| <= band
double band_leak(const WaveFunction& fhat, double band);

// Closed-form packet exp(-(theta-c)^2/(2 s^2) + i kappa theta), sampled in grid.picture.
WaveFunction gaussian_packet(const GridSpec& g, double c, double s, double kappa = 0.0);

enum class ProbeKind { gaussian_bump, band_limited_random, hermite_like };

struct ProbeParams {
    double center_lo = -5.0;
    double center_hi = 5.0;
    double width_lo = 0.5;
    double width_hi = 2.0;
    double momentum_max = 0.0;
    double lambda_max = 20.0;
    int hermite_max = 6;
    Picture picture = Picture::theta;
};

std::vector<WaveFunction> probe_family(const GridSpec& g, ProbeKind kind, const ProbeParams& p,
                                       std::size_t count, std::uint64_t seed);

ProbeKind parse_probe_kind(const std::string& s);

} // namespace modpair
