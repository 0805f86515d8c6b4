#include "nsverify/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <memory>
#include <mutex>

#include "nsverify/analysis.hpp"
#include "nsverify/parallel.hpp"

namespace nsv {

namespace {

using Complex = std::complex<double>;

/// FFTW plans and scratch buffers for one grid size. Transforms copy through
/// the internal buffers, so callers keep ownership of their arrays.
class SpectralWorkspace {
public:
    explicit SpectralWorkspace(int n)
        : n_(n), nc_(std::size_t(n) * n * (n / 2 + 1)), nr_(std::size_t(n) * n * n) {
        rbuf_ = fftw_alloc_real(nr_);
        cbuf_ = fftw_alloc_complex(nc_);
        fwd_ = fftw_plan_dft_r2c_3d(n, n, n, rbuf_, cbuf_, FFTW_MEASURE);
        bwd_ = fftw_plan_dft_c2r_3d(n, n, n, cbuf_, rbuf_, FFTW_MEASURE);
    }
    ~SpectralWorkspace() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(rbuf_);
        fftw_free(cbuf_);
    }
    SpectralWorkspace(const SpectralWorkspace&) = delete;
    SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

    int n() const { return n_; }
    std::size_t spectral_size() const { return nc_; }

    /// Physical -> normalized Fourier coefficients (1/n^3 scaling).
    void forward(const double* in, Complex* out) {
        std::memcpy(rbuf_, in, nr_ * sizeof(double));
        fftw_execute(fwd_);
        const double scale = 1.0 / double(nr_);
        for (std::size_t i = 0; i < nc_; ++i)
            out[i] = Complex(cbuf_[i][0] * scale, cbuf_[i][1] * scale);
    }
    void backward(const Complex* in, double* out) {
        for (std::size_t i = 0; i < nc_; ++i) {
            cbuf_[i][0] = in[i].real();
            cbuf_[i][1] = in[i].imag();
        }
        fftw_execute(bwd_);
        std::memcpy(out, rbuf_, nr_ * sizeof(double));
    }

    int wavenumber(int idx) const { return idx <= n_ / 2 ? idx : idx - n_; }

    /// Iterates all retained modes as (flat index, k1, k2, k3).
    template <typename F>
    void for_modes(F&& fn) const {
        std::size_t idx = 0;
        for (int i = 0; i < n_; ++i) {
            int k1 = wavenumber(i);
            for (int j = 0; j < n_; ++j) {
                int k2 = wavenumber(j);
                for (int k = 0; k <= n_ / 2; ++k, ++idx) fn(idx, k1, k2, k);
            }
        }
    }

private:
    int n_;
    std::size_t nc_, nr_;
    double* rbuf_;
    fftw_complex* cbuf_;
    fftw_plan fwd_, bwd_;
};

/// Plans are cached per grid size; transforms execute on the calling thread
/// (the numeric layer runs its time loops sequentially).
SpectralWorkspace& shared_workspace(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SpectralWorkspace>> cache;
    std::scoped_lock lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<SpectralWorkspace>(n);
    return *slot;
}

using SpectralTriple = std::array<std::vector<Complex>, 3>;

SpectralTriple make_spectral(const SpectralWorkspace& ws) {
    SpectralTriple s;
    for (auto& c : s) c.assign(ws.spectral_size(), Complex(0.0));
    return s;
}

SpectralTriple to_spectral(SpectralWorkspace& ws, const GridField& f) {
    SpectralTriple s = make_spectral(ws);
    for (int c = 0; c < 3; ++c) ws.forward(f.component(c), s[c].data());
    return s;
}

GridField to_physical(SpectralWorkspace& ws, const SpectralTriple& s, double alpha, double kappa,
                      double t) {
    GridField f = GridField::zeros(ws.n(), alpha, kappa, t);
    for (int c = 0; c < 3; ++c) ws.backward(s[c].data(), f.component(c));
    return f;
}

void project_solenoidal(const SpectralWorkspace& ws, SpectralTriple& s) {
    ws.for_modes([&](std::size_t idx, int k1, int k2, int k3) {
        long k2n = long(k1) * k1 + long(k2) * k2 + long(k3) * k3;
        if (k2n == 0) return;
        Complex dot = double(k1) * s[0][idx] + double(k2) * s[1][idx] + double(k3) * s[2][idx];
        Complex f = dot / double(k2n);
        s[0][idx] -= double(k1) * f;
        s[1][idx] -= double(k2) * f;
        s[2][idx] -= double(k3) * f;
    });
}

void apply_dealias(const SpectralWorkspace& ws, SpectralTriple& s) {
    int cut = ws.n() / 3;
    ws.for_modes([&](std::size_t idx, int k1, int k2, int k3) {
        if (std::abs(k1) > cut || std::abs(k2) > cut || std::abs(k3) > cut)
            for (auto& c : s) c[idx] = Complex(0.0);
    });
}

void zero_mean_mode(SpectralTriple& s) {
    for (auto& c : s) c[0] = Complex(0.0);
}

/// Convective-form nonlinear term N = -(v . grad) v, dealiased and projected.
class NonlinearEvaluator {
public:
    NonlinearEvaluator(SpectralWorkspace& ws, double alpha)
        : ws_(ws), alpha_(alpha), v_(3), dv_(3), scratch_(ws.spectral_size()) {
        for (auto& b : v_) b.assign(ws.n() * std::size_t(ws.n()) * ws.n(), 0.0);
        for (auto& b : dv_) b.assign(v_[0].size(), 0.0);
        nphys_.assign(v_[0].size(), 0.0);
    }

    void operator()(const SpectralTriple& u, SpectralTriple& out) {
        for (int c = 0; c < 3; ++c) ws_.backward(u[c].data(), v_[c].data());
        std::size_t nr = v_[0].size();
        for (int i = 0; i < 3; ++i) {
            // d_j v_i for the three j, then accumulate -v_j d_j v_i
            for (int j = 0; j < 3; ++j) {
                derivative(u[i], j);
                ws_.backward(scratch_.data(), dv_[j].data());
            }
            for (std::size_t p = 0; p < nr; ++p)
                nphys_[p] = -(v_[0][p] * dv_[0][p] + v_[1][p] * dv_[1][p] + v_[2][p] * dv_[2][p]);
            ws_.forward(nphys_.data(), out[i].data());
        }
        apply_dealias(ws_, out);
        project_solenoidal(ws_, out);
        zero_mean_mode(out);
    }

private:
    void derivative(const std::vector<Complex>& u, int axis) {
        ws_.for_modes([&](std::size_t idx, int k1, int k2, int k3) {
            int k = axis == 0 ? k1 : axis == 1 ? k2 : k3;
            scratch_[idx] = Complex(0.0, alpha_ * double(k)) * u[idx];
        });
    }

    SpectralWorkspace& ws_;
    double alpha_;
    std::vector<std::vector<double>> v_, dv_;
    std::vector<double> nphys_;
    std::vector<Complex> scratch_;
};

}  // namespace

GridField GridField::zeros(int n, double alpha, double kappa, double t) {
    GridField f;
    f.n = n;
    f.alpha = alpha;
    f.kappa = kappa;
    f.t = t;
    f.data.assign(3 * f.n3(), 0.0);
    return f;
}

GridField sample_profiles(const VectorField& profiles, int n, double alpha, double scale) {
    GridField f = GridField::zeros(n, alpha, 0.0);
    const double dx = 2.0 * M_PI / (alpha * n);
    for (int c = 0; c < 3; ++c) {
        RealTrigPoly rp(profiles[c], alpha);
        double* out = f.component(c);
        parallel_for(std::size_t(n), [&](std::size_t i) {
            std::array<double, 3> x;
            x[0] = double(i) * dx;
            for (int j = 0; j < n; ++j) {
                x[1] = j * dx;
                for (int k = 0; k < n; ++k) {
                    x[2] = k * dx;
                    out[f.index(int(i), j, k)] = scale * rp.eval(x);
                }
            }
        });
    }
    return f;
}

GridField grid_sample(const FlowSpec& flow, int n, double t, double alpha, double kappa) {
    double a = flow.fixed_alpha.value_or(alpha);
    double scale = flow.linear_scale * flow.velocity.decay_factor(t, a, kappa);
    GridField f = sample_profiles(flow.velocity_profiles(), n, a, scale);
    f.kappa = kappa;
    f.t = t;
    return f;
}

double max_abs(const GridField& f) {
    double m = 0.0;
    for (double v : f.data) m = std::max(m, std::abs(v));
    return m;
}

double grid_energy(const GridField& f) {
    double acc = 0.0;
    for (double v : f.data) acc += v * v;
    return 0.5 * acc / double(f.n3());
}

double l2_norm(const GridField& f) {
    double acc = 0.0;
    for (double v : f.data) acc += v * v;
    return std::sqrt(acc / double(f.n3()));
}

double l2_relative_error(const GridField& a, const GridField& b) {
    if (a.n != b.n) throw std::invalid_argument("l2_relative_error: grid size mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        double d = a.data[i] - b.data[i];
        num += d * d;
        den += b.data[i] * b.data[i];
    }
    return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

double max_divergence(const GridField& f) {
    SpectralWorkspace& ws = shared_workspace(f.n);
    SpectralTriple u = to_spectral(ws, f);
    std::vector<Complex> div(ws.spectral_size());
    ws.for_modes([&](std::size_t idx, int k1, int k2, int k3) {
        div[idx] = Complex(0.0, f.alpha) *
                   (double(k1) * u[0][idx] + double(k2) * u[1][idx] + double(k3) * u[2][idx]);
    });
    std::vector<double> d(f.n3());
    ws.backward(div.data(), d.data());
    double m = 0.0;
    for (double v : d) m = std::max(m, std::abs(v));
    return m;
}

double grid_helicity(const GridField& f) {
    SpectralWorkspace& ws = shared_workspace(f.n);
    SpectralTriple u = to_spectral(ws, f);
    SpectralTriple w = make_spectral(ws);
    ws.for_modes([&](std::size_t idx, int k1, int k2, int k3) {
        Complex ik1(0.0, f.alpha * k1), ik2(0.0, f.alpha * k2), ik3(0.0, f.alpha * k3);
        w[0][idx] = ik2 * u[2][idx] - ik3 * u[1][idx];
        w[1][idx] = ik3 * u[0][idx] - ik1 * u[2][idx];
        w[2][idx] = ik1 * u[1][idx] - ik2 * u[0][idx];
    });
    GridField omega = to_physical(ws, w, f.alpha, f.kappa, f.t);
    double acc = 0.0;
    for (std::size_t i = 0; i < f.data.size(); ++i) acc += f.data[i] * omega.data[i];
    return acc / double(f.n3());
}

GridField leray_project(const GridField& g) {
    SpectralWorkspace& ws = shared_workspace(g.n);
    SpectralTriple u = to_spectral(ws, g);
    project_solenoidal(ws, u);
    return to_physical(ws, u, g.alpha, g.kappa, g.t);
}

GridField evolve(const GridField& v0, const EvolveConfig& cfg,
                 const std::function<void(const GridField&)>& on_output) {
    if (cfg.dt <= 0.0) throw EvolveError("evolve: dt must be positive");
    if (cfg.t_final < 0.0) throw EvolveError("evolve: t_final must be nonnegative");

    const int n = v0.n;
    const double alpha = v0.alpha, kappa = v0.kappa;
    const double vmax = max_abs(v0);
    const double dx = 2.0 * M_PI / (alpha * n);
    if (vmax > 0.0) {
        double cfl = 0.5 * dx / vmax;
        // RK4 stability radius ~2.83 on the imaginary axis; advective
        // eigenvalues extend to k_max |v| with k_max after dealiasing.
        double kmax = alpha * double(n / 3) * std::sqrt(3.0);
        double rk4 = 2.83 / (kmax * vmax);
        if (cfg.dt > cfl || cfg.dt > rk4)
            throw EvolveError("evolve: dt " + std::to_string(cfg.dt) +
                              " violates stability bounds (CFL " + std::to_string(cfl) +
                              ", RK4 " + std::to_string(rk4) + ")");
    }

    SpectralWorkspace& ws = shared_workspace(n);
    SpectralTriple u = to_spectral(ws, v0);
    apply_dealias(ws, u);
    project_solenoidal(ws, u);

    NonlinearEvaluator nonlinear(ws, alpha);
    SpectralTriple n1 = make_spectral(ws), n2 = make_spectral(ws), n3 = make_spectral(ws),
                   n4 = make_spectral(ws), stage = make_spectral(ws);

    // Viscous integrating factors over half and full steps.
    std::vector<double> ehalf(ws.spectral_size()), efull(ws.spectral_size());
    ws.for_modes([&](std::size_t idx, int k1, int k2, int k3) {
        double k2phys = alpha * alpha * double(long(k1) * k1 + long(k2) * k2 + long(k3) * k3);
        ehalf[idx] = std::exp(-kappa * k2phys * cfg.dt / 2.0);
        efull[idx] = ehalf[idx] * ehalf[idx];
    });

    const long steps = std::lround(std::ceil(cfg.t_final / cfg.dt - 1e-12));
    double t = v0.t;
    double energy_prev = grid_energy(v0);
    if (on_output) on_output(to_physical(ws, u, alpha, kappa, t));

    for (long step = 0; step < steps; ++step) {
        double dt = std::min(cfg.dt, v0.t + cfg.t_final - t);

        bool resized = dt != cfg.dt;
        std::vector<double> eh, ef;
        const std::vector<double>*half = &ehalf, *full = &efull;
        if (resized) {
            eh.resize(ws.spectral_size());
            ef.resize(ws.spectral_size());
            ws.for_modes([&](std::size_t idx, int k1, int k2, int k3) {
                double k2phys =
                    alpha * alpha * double(long(k1) * k1 + long(k2) * k2 + long(k3) * k3);
                eh[idx] = std::exp(-kappa * k2phys * dt / 2.0);
                ef[idx] = eh[idx] * eh[idx];
            });
            half = &eh;
            full = &ef;
        }

        nonlinear(u, n1);
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < u[c].size(); ++i)
                stage[c][i] = (*half)[i] * (u[c][i] + 0.5 * dt * n1[c][i]);
        nonlinear(stage, n2);
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < u[c].size(); ++i)
                stage[c][i] = (*half)[i] * u[c][i] + 0.5 * dt * n2[c][i];
        nonlinear(stage, n3);
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < u[c].size(); ++i)
                stage[c][i] = (*full)[i] * u[c][i] + dt * (*half)[i] * n3[c][i];
        nonlinear(stage, n4);
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < u[c].size(); ++i)
                u[c][i] = (*full)[i] * u[c][i] +
                          dt / 6.0 *
                              ((*full)[i] * n1[c][i] + 2.0 * (*half)[i] * (n2[c][i] + n3[c][i]) +
                               n4[c][i]);
        project_solenoidal(ws, u);
        t += dt;

        GridField snapshot = to_physical(ws, u, alpha, kappa, t);
        double energy = grid_energy(snapshot);
        if (energy > energy_prev * (1.0 + 1e-8))
            throw EvolveError("evolve: energy grew from " + std::to_string(energy_prev) + " to " +
                              std::to_string(energy) + " at t = " + std::to_string(t) +
                              " (step " + std::to_string(step) + "); decaying flow expected");
        energy_prev = energy;
        if (on_output && ((step + 1) % cfg.output_every == 0 || step + 1 == steps))
            on_output(snapshot);
    }
    return to_physical(ws, u, alpha, kappa, t);
}

DeviationProbe deviation_probe(const FlowSpec& flow, int n, double alpha, double kappa,
                               const EvolveConfig& cfg) {
    DeviationProbe probe;
    const double a = flow.fixed_alpha.value_or(alpha);

    VectorField v = flow.velocity_profiles();
    VectorField remainder = leray_remainder_exact(compute_inertial(v));
    double vnorm = l2_mean_norm(v, a);
    probe.initial_rate_exact = l2_mean_norm(remainder, a) / vnorm;

    GridField ref0 = sample_profiles(v, n, a, flow.linear_scale);
    double ref_norm = l2_norm(ref0);
    GridField v0 = grid_sample(flow, n, 0.0, a, kappa);

    evolve(v0, cfg, [&](const GridField& state) {
        double decay = flow.velocity.decay_factor(state.t, a, kappa);
        double num = 0.0;
        for (std::size_t i = 0; i < state.data.size(); ++i) {
            double d = state.data[i] - decay * ref0.data[i];
            num += d * d;
        }
        probe.curve.emplace_back(state.t, std::sqrt(num / double(state.n3())) / ref_norm);
    });

    // Two-point Richardson estimate of d(deviation)/dt at t = 0 from the
    // first two output samples (curve[0] is t = 0).
    if (probe.curve.size() >= 3) {
        auto [t1, d1] = probe.curve[1];
        auto [t2, d2] = probe.curve[2];
        if (std::abs(t2 - 2.0 * t1) < 1e-12)
            probe.initial_rate_measured = (4.0 * d1 - d2) / (2.0 * t1);
        else
            probe.initial_rate_measured = d1 / t1;
    } else if (probe.curve.size() == 2) {
        probe.initial_rate_measured = probe.curve[1].second / probe.curve[1].first;
    }
    return probe;
}

namespace {

template <typename T>
void write_le(std::ostream& os, T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    std::array<unsigned char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(bytes.begin(), bytes.end());
    os.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <typename T>
T read_le(std::istream& is) {
    std::array<unsigned char, sizeof(T)> bytes;
    is.read(reinterpret_cast<char*>(bytes.data()), sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(bytes.begin(), bytes.end());
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

}  // namespace

void write_checkpoint(const std::string& path, const GridField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_checkpoint: cannot open " + path);
    write_le<std::uint32_t>(os, std::uint32_t(f.n));
    write_le<double>(os, f.alpha);
    write_le<double>(os, f.kappa);
    write_le<double>(os, f.t);
    for (double v : f.data) write_le<double>(os, v);
    if (!os) throw std::runtime_error("write_checkpoint: write failed for " + path);
}

GridField read_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_checkpoint: cannot open " + path);
    std::uint32_t n = read_le<std::uint32_t>(is);
    GridField f = GridField::zeros(int(n), 1.0, 0.0);
    f.alpha = read_le<double>(is);
    f.kappa = read_le<double>(is);
    f.t = read_le<double>(is);
    for (double& v : f.data) v = read_le<double>(is);
    if (!is) throw std::runtime_error("read_checkpoint: truncated file " + path);
    return f;
}

}  // namespace nsv
