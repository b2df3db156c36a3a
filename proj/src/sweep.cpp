#include "terratrack/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "terratrack/errors.hpp"

namespace terratrack {
namespace {

constexpr std::size_t kChunkSize = 2048;
constexpr double kRefineTolerance = 1e-4;  // on the refined variable

constexpr double quiet_nan() { return std::numeric_limits<double>::quiet_NaN(); }

double get_var(const TrackGeometry& geom, const VehicleOperatingState& state, SweepVar var) {
    switch (var) {
        case SweepVar::b: return geom.b;
        case SweepVar::l: return geom.l;
        case SweepVar::B: return geom.B;
        case SweepVar::v: return state.v;
        case SweepVar::m: return state.m;
        default: return state.i;
    }
}

void set_var(TrackGeometry& geom, VehicleOperatingState& state, SweepVar var, double value) {
    switch (var) {
        case SweepVar::b: geom.b = value; break;
        case SweepVar::l: geom.l = value; break;
        case SweepVar::B: geom.B = value; break;
        case SweepVar::v: state.v = value; break;
        case SweepVar::m: state.m = value; break;
        default: state.i = value; break;
    }
}

struct Grid {
    std::array<VarRange, kSweepVarCount> ranges{};  // degenerate for fixed vars
    std::array<std::size_t, kSweepVarCount> counts{};
    std::size_t total = 0;
};

Grid build_grid(const DesignSpace& space, const SweepEnv& env) {
    Grid grid;
    double total_guard = 1.0;
    for (std::size_t j = 0; j < kSweepVarCount; ++j) {
        const auto var = static_cast<SweepVar>(j);
        if (space.ranges[j]) {
            grid.ranges[j] = *space.ranges[j];
        } else {
            const double fixed = get_var(env.base_geom, env.base_state, var);
            grid.ranges[j] = {fixed, fixed, 1.0};
        }
        grid.counts[j] = grid.ranges[j].count();
        total_guard *= static_cast<double>(grid.counts[j]);
    }
    if (total_guard > static_cast<double>(space.cap)) {
        std::ostringstream msg;
        msg << "sweep grid has " << total_guard << " points, above the cap of " << space.cap;
        throw ConfigError(msg.str());
    }
    grid.total = 1;
    for (const std::size_t count : grid.counts) grid.total *= count;
    return grid;
}

void validate_space(const DesignSpace& space, const SweepEnv& env) {
    env.soil.validate();
    env.base_geom.validate();
    env.base_state.validate();

    auto range_check = [&](SweepVar var, bool positive, double max_allowed) {
        const auto& range = space.ranges[static_cast<std::size_t>(var)];
        if (!range) return;
        if (!(range->step > 0.0)) {
            throw ConfigError(std::string("sweep range for ") + to_string(var) +
                              ": step must be > 0");
        }
        if (range->hi < range->lo) {
            throw ConfigError(std::string("sweep range for ") + to_string(var) + ": empty range");
        }
        if (positive && !(range->lo > 0.0)) {
            throw ConfigError(std::string("sweep range for ") + to_string(var) +
                              ": values must be > 0");
        }
        if (range->hi > max_allowed) {
            throw ConfigError(std::string("sweep range for ") + to_string(var) +
                              ": values exceed the allowed maximum");
        }
    };
    const double unbounded = std::numeric_limits<double>::infinity();
    range_check(SweepVar::b, true, unbounded);
    range_check(SweepVar::l, true, unbounded);
    range_check(SweepVar::B, true, unbounded);
    range_check(SweepVar::v, false, unbounded);
    range_check(SweepVar::m, true, unbounded);
    range_check(SweepVar::i, true, 1.0);
    if (const auto& vr = space.ranges[static_cast<std::size_t>(SweepVar::v)];
        vr && !(vr->lo >= 0.0)) {
        throw ConfigError("sweep range for v: values must be >= 0");
    }

    if (space.constraints.steering && (!env.soil.mu_t || !env.soil.f_r)) {
        throw ConfigError("steering constraint needs terrain mu_t and f_r");
    }
    if (space.constraints.time_budget) {
        if (!env.fire_test || !env.extinguisher) {
            throw ConfigError("time-budget constraint needs a fire test and an extinguisher");
        }
        const auto& vr = space.ranges[static_cast<std::size_t>(SweepVar::v)];
        const double v_min = vr ? vr->lo : env.base_state.v;
        if (!(v_min > 0.0)) {
            throw ConfigError("time-budget constraint needs speed > 0 everywhere on the grid");
        }
    }
    if (space.refine && !space.ranges[static_cast<std::size_t>(*space.refine)]) {
        throw ConfigError(std::string("refine variable ") + to_string(*space.refine) +
                          " has no sweep range");
    }
}

SweepRow eval_values(const std::array<double, kSweepVarCount>& values, const DesignSpace& space,
                     const SweepEnv& env) {
    TrackGeometry geom = env.base_geom;
    VehicleOperatingState state = env.base_state;
    for (std::size_t j = 0; j < kSweepVarCount; ++j) {
        set_var(geom, state, static_cast<SweepVar>(j), values[j]);
    }

    const PerformanceReport rep = evaluate(geom, env.soil, state, env.eval);

    SweepRow row;
    row.b = geom.b;
    row.l = geom.l;
    row.B = geom.B;
    row.v = state.v;
    row.m = state.m;
    row.i = state.i;
    row.z_o = rep.z_o;
    row.R_in = rep.R_in;
    row.R_b = rep.R_b;
    row.R_c = rep.R_c;
    row.R_g = rep.R_g;
    row.F = rep.F;
    row.drawbar_pull = rep.drawbar_pull;
    row.a = rep.a;

    row.feasible = true;
    auto fail = [&](FailedCheck check) {
        row.feasible = false;
        row.failed = check;
    };

    // Fixed check order: pitch ratio, steering, slope, time budget.
    if (space.constraints.pitch_ratio &&
        !roadwheel_pitch_ratio(geom, env.eval.pitch_band).pass) {
        fail(FailedCheck::pitch_ratio);
    }
    if (row.feasible && space.constraints.steering &&
        !steering_check(geom, env.soil, rep.p).pass) {
        fail(FailedCheck::steering);
    }
    if (row.feasible && space.constraints.slope_climb) {
        double a30 = rep.a;
        if (state.theta_deg != 30.0) {
            VehicleOperatingState slope_state = state;
            slope_state.theta_deg = 30.0;
            a30 = evaluate(geom, env.soil, slope_state, env.eval).a;
        }
        if (a30 < 0.0) fail(FailedCheck::slope_climb);
    }
    if (row.feasible && space.constraints.time_budget) {
        const double time = circumnavigation_time(*env.fire_test, state.v);
        if (!(time < env.extinguisher->discharge_time)) fail(FailedCheck::time_budget);
    }

    if (row.feasible) {
        row.objective =
            space.objective == Objective::max_acceleration ? rep.a : rep.drawbar_pull;
    } else {
        row.objective = quiet_nan();
    }
    return row;
}

std::array<double, kSweepVarCount> decode(const Grid& grid, std::size_t index) {
    std::array<double, kSweepVarCount> values{};
    std::size_t rem = index;
    for (std::size_t j = kSweepVarCount; j-- > 0;) {
        values[j] = grid.ranges[j].at(rem % grid.counts[j]);
        rem /= grid.counts[j];
    }
    return values;
}

FeasibilityReport best_feasibility(const DesignSpace& space, const SweepEnv& env,
                                   const PerformanceReport& rep) {
    FeasibilityReport feas;
    auto copy_check = [&](const char* name) {
        for (const auto& check : rep.checks) {
            if (check.name == name) {
                feas.checks.push_back(check);
                return;
            }
        }
    };
    if (space.constraints.pitch_ratio) copy_check("pitch_ratio");
    if (space.constraints.steering) copy_check("steering");
    if (space.constraints.slope_climb) {
        VehicleOperatingState slope_state = rep.state;
        slope_state.theta_deg = 30.0;
        feas.checks.push_back(
            slope_climb_check(evaluate(rep.geom, env.soil, slope_state, env.eval)));
    }
    if (space.constraints.time_budget) {
        feas.checks.push_back(
            discharge_budget_check(*env.fire_test, rep.state.v, *env.extinguisher));
    }
    return feas;
}

std::optional<RefineOutcome> golden_section_refine(const DesignSpace& space, const SweepEnv& env,
                                                   const Grid& grid, const SweepRow& best) {
    const SweepVar var = *space.refine;
    const auto j = static_cast<std::size_t>(var);
    const VarRange& range = grid.ranges[j];

    std::array<double, kSweepVarCount> base = {best.b, best.l, best.B, best.v, best.m, best.i};
    const double center = base[j];
    double lo = std::max(range.lo, center - range.step);
    double hi = std::min(range.hi, center + range.step);

    RefineOutcome out;
    out.var = var;
    out.value = center;
    out.objective = best.objective;
    out.row = best;

    auto probe = [&](double x) {
        auto values = base;
        values[j] = x;
        const SweepRow row = eval_values(values, space, env);
        const double obj =
            row.feasible ? row.objective : -std::numeric_limits<double>::infinity();
        if (obj > out.objective) {
            out.value = x;
            out.objective = obj;
            out.row = row;
        }
        return obj;
    };

    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - ratio * (hi - lo);
    double d = lo + ratio * (hi - lo);
    double fc = probe(c);
    double fd = probe(d);
    while (hi - lo > kRefineTolerance) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = probe(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = probe(d);
        }
    }
    return out;
}

}  // namespace

const char* to_string(SweepVar var) {
    switch (var) {
        case SweepVar::b: return "b";
        case SweepVar::l: return "l";
        case SweepVar::B: return "B";
        case SweepVar::v: return "v";
        case SweepVar::m: return "m";
        default: return "i";
    }
}

std::optional<SweepVar> sweep_var_from_string(const std::string& name) {
    for (std::size_t j = 0; j < kSweepVarCount; ++j) {
        const auto var = static_cast<SweepVar>(j);
        if (name == to_string(var)) return var;
    }
    return std::nullopt;
}

const char* to_string(Objective objective) {
    return objective == Objective::max_acceleration ? "max_acceleration" : "max_drawbar_pull";
}

const char* to_string(FailedCheck check) {
    switch (check) {
        case FailedCheck::pitch_ratio: return "pitch_ratio";
        case FailedCheck::steering: return "steering";
        case FailedCheck::slope_climb: return "slope_climb";
        case FailedCheck::time_budget: return "time_budget";
        default: return "";
    }
}

std::size_t VarRange::count() const {
    if (!(step > 0.0) || hi < lo) {
        throw ConfigError("VarRange: step must be > 0 and hi >= lo");
    }
    // Inclusive upper bound with a small slack against accumulated rounding.
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

double VarRange::at(std::size_t index) const {
    return std::min(hi, lo + step * static_cast<double>(index));
}

SweepResult sweep(const DesignSpace& space, const SweepEnv& env, const SweepOptions& opts,
                  const RowSink& sink) {
    validate_space(space, env);
    const Grid grid = build_grid(space, env);

    const std::size_t n_chunks = (grid.total + kChunkSize - 1) / kChunkSize;
    std::vector<std::vector<SweepRow>> buffers(n_chunks);

    std::vector<std::size_t> schedule(n_chunks);
    for (std::size_t s = 0; s < n_chunks; ++s) schedule[s] = s;
    if (opts.shuffle_evaluation) {
        std::mt19937_64 rng(opts.shuffle_seed);
        std::shuffle(schedule.begin(), schedule.end(), rng);
    }

    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> stop{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!stop.load(std::memory_order_relaxed)) {
            const std::size_t slot = cursor.fetch_add(1, std::memory_order_relaxed);
            if (slot >= n_chunks) break;
            const std::size_t chunk = schedule[slot];
            const std::size_t begin = chunk * kChunkSize;
            const std::size_t end = std::min(grid.total, begin + kChunkSize);
            try {
                auto& buffer = buffers[chunk];
                buffer.reserve(end - begin);
                for (std::size_t index = begin; index < end; ++index) {
                    buffer.push_back(eval_values(decode(grid, index), space, env));
                }
            } catch (...) {
                {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
                stop.store(true, std::memory_order_relaxed);
            }
        }
    };

    const unsigned n_threads = std::max(1u, opts.threads);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    SweepResult result;
    result.total = grid.total;
    for (std::size_t chunk = 0; chunk < n_chunks; ++chunk) {
        for (const SweepRow& row : buffers[chunk]) {
            if (row.feasible) {
                ++result.feasible_count;
                // Strict > keeps the lexicographically first point on ties.
                if (!result.best || row.objective > result.best->objective) {
                    result.best = row;
                }
            }
            if (sink) sink(row);
        }
    }

    if (result.best) {
        TrackGeometry geom = env.base_geom;
        VehicleOperatingState state = env.base_state;
        const std::array<double, kSweepVarCount> values = {
            result.best->b, result.best->l, result.best->B,
            result.best->v, result.best->m, result.best->i};
        for (std::size_t j = 0; j < kSweepVarCount; ++j) {
            set_var(geom, state, static_cast<SweepVar>(j), values[j]);
        }
        result.best_report = evaluate(geom, env.soil, state, env.eval);
        result.best_feasibility = best_feasibility(space, env, *result.best_report);
        if (space.refine) {
            result.refined = golden_section_refine(space, env, grid, *result.best);
        }
    }
    return result;
}

}  // namespace terratrack
