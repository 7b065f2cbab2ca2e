#include <ftqc/distill.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace ftqc::distill {

namespace {

constexpr int n_grid = (surface::d_max - surface::d_min) / 2 + 1;  // odd distances

int grid_d(int idx) { return surface::d_min + 2 * idx; }

double retry_factor(double p_in) {
    // Expected repetitions of a 15-input block when any of its inputs failing
    // forces a redo; diverges once 15*p reaches 1.
    const double denom = 1.0 - bk_inputs_per_block * p_in;
    if (!(denom > 0.0))
        throw retry_divergence_error("retry factor diverges: 15*p >= 1 with p = " + std::to_string(p_in));
    return 1.0 / denom;
}

}  // namespace

double bk_injected_error(double p_g) {
    if (!(p_g > 0.0) || !(p_g < 0.1))
        throw invalid_argument_error("bk_injected_error: p_g must be in (0, 0.1)");
    return 10.0 * p_g;
}

RoundError bk_round_error(double p_prev, const surface::SurfaceParams& p) {
    if (!(p_prev >= 0.0) || !(p_prev < 1.0))
        throw invalid_argument_error("bk_round_error: p_prev must be in [0,1)");
    RoundError e;
    e.suppressed = bk_cubic_coeff * p_prev * p_prev * p_prev;
    e.induced = bk_block_pieces * surface::logical_error_per_piece(p);
    return e;
}

std::vector<RoundOutcome> bk_evaluate(const DistillationSchedule& schedule, double p_g,
                                      VolumeModel model) {
    if (schedule.empty() || schedule.size() > 3)
        throw invalid_argument_error("bk_evaluate: schedule must have 1..3 rounds");
    for (int d : schedule)
        if (d < 1) throw invalid_argument_error("bk_evaluate: distances must be >= 1");

    const int rounds = static_cast<int>(schedule.size());
    std::vector<double> p(rounds + 1), f(rounds + 1);
    p[0] = bk_injected_error(p_g);
    for (int s = 1; s <= rounds; ++s) {
        f[s] = retry_factor(p[s - 1]);
        p[s] = bk_round_error(p[s - 1], {p_g, schedule[s - 1]}).total();
    }

    std::vector<RoundOutcome> out(rounds);
    for (int r = 1; r <= rounds; ++r) {
        // Volume of the r-round prefix: each round-s block is replicated
        // 15^(r-s) times and inflated by its retry factor.
        double pieces = 0.0;
        for (int s = 1; s <= r; ++s)
            pieces += std::pow(15.0, r - s) * surface::piece_volume(schedule[s - 1]) * f[s];
        if (model == VolumeModel::reference && r == 3)
            pieces += 225.0 * surface::piece_volume(schedule[0]) * f[1];
        out[r - 1] = {p[r], bk_block_pieces * pieces};
    }
    return out;
}

std::string BkProtocol::descriptor() const {
    if (schedule.empty()) return "none";
    std::string s = "(";
    for (size_t i = 0; i < schedule.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(schedule[i]);
    }
    s += ')';
    return s;
}

struct BkGrid::Impl {
    double p_g = 0.0;
    int max_rounds = 0;
    VolumeModel model = VolumeModel::reference;
    double p_in = 0.0;
    bool diverged = false;  // 15*p_in >= 1: no schedule converges

    // Flat per-level arrays over the odd-distance grid. Infeasible entries
    // hold p = +inf so feasibility is a single comparison.
    std::vector<double> p1, v1, p2, v2, p3, v3;

    static constexpr double inf = std::numeric_limits<double>::infinity();

    Impl(double pg, int rounds, VolumeModel m) : p_g(pg), max_rounds(rounds), model(m) {
        if (rounds < 1 || rounds > 3)
            throw invalid_argument_error("bk_search: max_rounds must be in 1..3");
        p_in = bk_injected_error(pg);
        if (bk_inputs_per_block * p_in >= 1.0) {
            diverged = true;
            return;
        }

        std::array<double, n_grid> pl, s3;
        for (int i = 0; i < n_grid; ++i) {
            pl[i] = surface::logical_error_per_piece(pg, grid_d(i));
            s3[i] = surface::piece_volume(grid_d(i));
        }
        const double f1 = 1.0 / (1.0 - bk_inputs_per_block * p_in);
        const double c = bk_block_pieces;
        const double p0c = bk_cubic_coeff * p_in * p_in * p_in;

        p1.assign(n_grid, inf);
        v1.assign(n_grid, inf);
        for (int i = 0; i < n_grid; ++i) {
            const double p = p0c + c * pl[i];
            if (p > 0.0 && p < 1.0) {
                p1[i] = p;
                v1[i] = c * s3[i] * f1;
            }
        }
        if (max_rounds < 2) return;

        p2.assign(static_cast<size_t>(n_grid) * n_grid, inf);
        v2.assign(static_cast<size_t>(n_grid) * n_grid, inf);
        for (int i = 0; i < n_grid; ++i) {
            if (p1[i] == inf || bk_inputs_per_block * p1[i] >= 1.0) continue;
            const double f2 = 1.0 / (1.0 - bk_inputs_per_block * p1[i]);
            const double base = 15.0 * s3[i] * f1;
            const double cc = bk_cubic_coeff * p1[i] * p1[i] * p1[i];
            for (int j = 0; j < n_grid; ++j) {
                const double p = cc + c * pl[j];
                if (p > 0.0 && p < 1.0) {
                    const size_t ij = static_cast<size_t>(i) * n_grid + j;
                    p2[ij] = p;
                    v2[ij] = c * (base + s3[j] * f2);
                }
            }
        }
        if (max_rounds < 3) return;

        p3.assign(static_cast<size_t>(n_grid) * n_grid * n_grid, inf);
        v3.assign(static_cast<size_t>(n_grid) * n_grid * n_grid, inf);
        for (int i = 0; i < n_grid; ++i) {
            if (p1[i] == inf || bk_inputs_per_block * p1[i] >= 1.0) continue;
            const double f2 = 1.0 / (1.0 - bk_inputs_per_block * p1[i]);
            // Reference accounting counts the first-round blocks twice in
            // three-round schedules; the recursion model does not.
            const double r1_mult = (model == VolumeModel::reference) ? 450.0 : 225.0;
            const double base1 = r1_mult * s3[i] * f1;
            for (int j = 0; j < n_grid; ++j) {
                const size_t ij = static_cast<size_t>(i) * n_grid + j;
                if (p2[ij] == inf || bk_inputs_per_block * p2[ij] >= 1.0) continue;
                const double f3 = 1.0 / (1.0 - bk_inputs_per_block * p2[ij]);
                const double base12 = base1 + 15.0 * s3[j] * f2;
                const double cc = bk_cubic_coeff * p2[ij] * p2[ij] * p2[ij];
                for (int k = 0; k < n_grid; ++k) {
                    const double p = cc + c * pl[k];
                    if (p > 0.0 && p < 1.0) {
                        const size_t ijk = ij * n_grid + k;
                        p3[ijk] = p;
                        v3[ijk] = c * (base12 + s3[k] * f3);
                    }
                }
            }
        }
    }

    BkProtocol scan(double target, bool same_distance) const {
        if (p_in <= target) return BkProtocol{{}, p_in, 0.0};
        if (diverged)
            throw infeasible_error("bk_search: injected error too large for any schedule");

        double best_v = inf;
        BkProtocol best;
        bool found = false;
        // Ascending (rounds, tuple) iteration with strict improvement gives
        // the tie order: fewer rounds first, then smallest tuple.
        for (int i = 0; i < n_grid && max_rounds >= 1; ++i) {
            if (p1[i] <= target && v1[i] < best_v) {
                best_v = v1[i];
                best = BkProtocol{{grid_d(i)}, p1[i], v1[i]};
                found = true;
            }
        }
        for (int i = 0; i < n_grid && max_rounds >= 2; ++i) {
            for (int j = same_distance ? i : 0; j < n_grid; ++j) {
                if (same_distance && j != i) break;
                const size_t ij = static_cast<size_t>(i) * n_grid + j;
                if (p2[ij] <= target && v2[ij] < best_v) {
                    best_v = v2[ij];
                    best = BkProtocol{{grid_d(i), grid_d(j)}, p2[ij], v2[ij]};
                    found = true;
                }
            }
        }
        for (int i = 0; i < n_grid && max_rounds >= 3; ++i) {
            for (int j = same_distance ? i : 0; j < n_grid; ++j) {
                if (same_distance && j != i) break;
                const size_t ij = static_cast<size_t>(i) * n_grid + j;
                for (int k = same_distance ? i : 0; k < n_grid; ++k) {
                    if (same_distance && k != i) break;
                    const size_t ijk = ij * n_grid + k;
                    if (p3[ijk] <= target && v3[ijk] < best_v) {
                        best_v = v3[ijk];
                        best = BkProtocol{{grid_d(i), grid_d(j), grid_d(k)}, p3[ijk], v3[ijk]};
                        found = true;
                    }
                }
            }
        }
        if (!found) throw infeasible_error("bk_search: no schedule reaches the target");
        return best;
    }

    std::vector<analysis::ProtocolPoint> sweep(bool same_distance) const {
        struct Entry {
            double v, p;
            uint32_t code;  // rounds(2) | i(7) | j(7) | k(7)
        };
        std::vector<Entry> entries;
        if (!diverged) {
            auto push = [&](double p, double v, int r, int i, int j, int k) {
                if (p != inf)
                    entries.push_back({v, p, static_cast<uint32_t>((r << 21) | (i << 14) | (j << 7) | k)});
            };
            for (int i = 0; i < n_grid && max_rounds >= 1; ++i) push(p1[i], v1[i], 1, i, 0, 0);
            for (int i = 0; i < n_grid && max_rounds >= 2; ++i)
                for (int j = same_distance ? i : 0; j < n_grid; ++j) {
                    if (same_distance && j != i) break;
                    const size_t ij = static_cast<size_t>(i) * n_grid + j;
                    push(p2[ij], v2[ij], 2, i, j, 0);
                }
            for (int i = 0; i < n_grid && max_rounds >= 3; ++i)
                for (int j = same_distance ? i : 0; j < n_grid; ++j) {
                    if (same_distance && j != i) break;
                    const size_t ij = static_cast<size_t>(i) * n_grid + j;
                    for (int k = same_distance ? i : 0; k < n_grid; ++k) {
                        if (same_distance && k != i) break;
                        push(p3[ij * n_grid + k], v3[ij * n_grid + k], 3, i, j, k);
                    }
                }
        }
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            if (a.v != b.v) return a.v < b.v;
            if (a.p != b.p) return a.p < b.p;
            return a.code < b.code;
        });
        std::vector<analysis::ProtocolPoint> out;
        double best_p = inf;
        for (const auto& e : entries) {
            if (e.p < best_p) {
                best_p = e.p;
                const int r = e.code >> 21;
                DistillationSchedule sched;
                sched.push_back(grid_d((e.code >> 14) & 127));
                if (r >= 2) sched.push_back(grid_d((e.code >> 7) & 127));
                if (r >= 3) sched.push_back(grid_d(e.code & 127));
                out.push_back(BkProtocol{std::move(sched), e.p, e.v}.point());
            }
        }
        return out;
    }
};

BkGrid::BkGrid(double p_g, int max_rounds, VolumeModel model)
    : impl_(std::make_unique<Impl>(p_g, max_rounds, model)) {}
BkGrid::~BkGrid() = default;
BkGrid::BkGrid(BkGrid&&) noexcept = default;
BkGrid& BkGrid::operator=(BkGrid&&) noexcept = default;

double BkGrid::p_g() const { return impl_->p_g; }
int BkGrid::max_rounds() const { return impl_->max_rounds; }
BkProtocol BkGrid::best(double target) const { return impl_->scan(target, false); }
BkProtocol BkGrid::best_same_distance(double target) const { return impl_->scan(target, true); }
std::vector<analysis::ProtocolPoint> BkGrid::frontier() const { return impl_->sweep(false); }
std::vector<analysis::ProtocolPoint> BkGrid::same_distance_frontier() const {
    return impl_->sweep(true);
}

BkProtocol bk_search(double p_g, double target, int max_rounds, VolumeModel model) {
    if (!(target > 0.0) || !(target < 1.0))
        throw invalid_argument_error("bk_search: target must be in (0,1)");
    return BkGrid(p_g, max_rounds, model).best(target);
}

BkProtocol bk_tub(double p_g, double target, int max_rounds, VolumeModel model) {
    if (!(target > 0.0) || !(target < 1.0))
        throw invalid_argument_error("bk_tub: target must be in (0,1)");
    return BkGrid(p_g, max_rounds, model).best_same_distance(target);
}

namespace {

void validate_h_code(const HCodeParams& p) {
    if (p.k < 2 || p.k % 2 != 0)
        throw invalid_argument_error("h_code: k must be even and >= 2");
    if (p.t < 1 || p.t > 4) throw invalid_argument_error("h_code: t must be in 1..4");
    for (double e : {p.eps_l, p.eps_p})
        if (!(e >= 0.0) || !(e < 1.0))
            throw invalid_argument_error("h_code: infidelities must be in [0,1)");
}

}  // namespace

double h_code_output_error(const HCodeParams& p) {
    validate_h_code(p);
    const double k = p.k, el = p.eps_l, ep = p.eps_p;
    if (p.t == 1) return (k - 1.0) * el * el + (2.0 * k + 2.0) * ep * ep;
    if (p.t == 2)
        return (k * k - 1.0) * el * el + 8.0 * (k * k + 4.0 * k + 3.0) * std::pow(ep, 4) +
               (k + 4.0) * (k + 4.0) * el * ep * ep;
    const double t = p.t;
    return (std::pow(k, t) - 1.0) * el * el +
           std::pow(2.0, std::pow(2.0, t) + t - 3.0) * (k + 1.0) * std::pow(k + 3.0, t - 1.0) *
               std::pow(ep, std::pow(2.0, t)) +
           std::pow(k + 4.0, t * std::pow(2.0, t - 2.0)) * el * std::pow(ep, std::pow(2.0, t - 1.0));
}

double h_code_detect_prob(const HCodeParams& p) {
    validate_h_code(p);
    const double k = p.k, el = p.eps_l, ep = p.eps_p;
    if (p.t == 1) return k * el + 2.0 * (k + 4.0) * ep;
    if (p.t == 2)
        return k * k * el + 2.0 * (k + 4.0) * (k + 4.0) * ep +
               2.0 * k * k * (k + 4.0) * (k + 4.0) * el * ep;
    throw unsupported_error("h_code_detect_prob: no expression for t > 2");
}

double multilevel_input_count(int k, int r) {
    if (k < 2 || k % 2 != 0)
        throw invalid_argument_error("multilevel_input_count: k must be even and >= 2");
    if (r < 1) throw invalid_argument_error("multilevel_input_count: r must be >= 1");
    const double x = (k + 4.0) / k;
    double bracket = 1.0 + x;
    for (int q = 1; q <= r; ++q) bracket += std::pow(2.0, q - 1) * std::pow(x, q);
    return bracket * std::pow(static_cast<double>(k), r * (r + 1) / 2);
}

double scaling_exponent(int n_in, int k_out, int d) {
    if (k_out < 1 || n_in <= k_out)
        throw invalid_argument_error("scaling_exponent: requires n_in > k_out >= 1");
    if (d < 2) throw invalid_argument_error("scaling_exponent: requires d >= 2");
    return std::log(static_cast<double>(n_in) / k_out) / std::log(static_cast<double>(d));
}

}  // namespace ftqc::distill
