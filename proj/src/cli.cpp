#include "chepta/cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "chepta/dense_oracle.hpp"
#include "chepta/matrix_io.hpp"
#include "json.hpp"

namespace chepta::cli {

using nlohmann::json;

namespace {

// The artifact and the exit code it carries.
struct Outcome {
    std::string text;
    int code = kOk;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <class S>
json string_array(const std::vector<S>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

template <class S>
json matrix_rows(const DenseMatrix<S>& m) {
    json rows = json::array();
    for (int i = 1; i <= m.order(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.order(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class S>
std::string matrix_csv(const DenseMatrix<S>& m) {
    std::string s;
    for (int i = 1; i <= m.order(); ++i) {
        for (int j = 1; j <= m.order(); ++j) {
            if (j > 1) s += ',';
            s += m(i, j).to_string();
        }
        s += '\n';
    }
    return s;
}

template <class S>
std::string column_csv(const std::vector<S>& v) {
    std::string s;
    for (const auto& x : v) s += x.to_string() + "\n";
    return s;
}

ExactMatrix input_matrix(const RunConfig& cfg) {
    if (cfg.input.empty()) throw InvalidInput("--input is required");
    return io::load_matrix(cfg.input);
}

FloatInvertOptions float_options(const RunConfig& cfg) {
    FloatInvertOptions o;
    o.factor.tol = cfg.tol;
    o.parallel_seeds = cfg.parallel_seeds;
    return o;
}

Outcome singular_outcome() { return {dump(json{{"error", "singular matrix"}, {"singular", true}}), kSingular}; }

Outcome run_det(const RunConfig& cfg) {
    const auto h = input_matrix(cfg);
    json j;
    if (cfg.backend == Backend::float64) {
        auto d = determinant(h.map(to_real), FloatOptions{cfg.tol});
        j = {{"det", d.value.to_string()}, {"pivot_overrides", 0}, {"singular", false}};
    } else {
        auto d = determinant(h);
        j = {{"det", d.value.to_string()}, {"pivot_overrides", d.pivot_overrides}, {"singular", d.singular}};
        if (d.singular) return {dump(j), kSingular};
    }
    return {dump(j), kOk};
}

Outcome run_inv(const RunConfig& cfg) {
    const auto h = input_matrix(cfg);
    if (cfg.backend == Backend::float64) {
        auto r = invert(h.map(to_real), float_options(cfg));
        if (cfg.format == OutputFormat::csv) return {matrix_csv(r.inverse), kOk};
        json j = {{"backend", "float"}, {"det", r.det.to_string()}, {"inverse", matrix_rows(r.inverse)}, {"n", h.order()}};
        return {dump(j), kOk};
    }
    InvertOptions opt;
    opt.parallel_seeds = cfg.parallel_seeds;
    opt.apply_b_substitution = cfg.apply_b_substitution;
    auto r = invert(h, opt);
    if (cfg.format == OutputFormat::csv) return {matrix_csv(r.inverse), kOk};
    json j = {{"b_substitutions", r.b_substitutions},
              {"backend", "exact"},
              {"c_substitutions", r.c_substitutions},
              {"det", r.det.to_string()},
              {"inverse", matrix_rows(r.inverse)},
              {"n", h.order()},
              {"pivot_overrides", r.pivot_overrides}};
    return {dump(j), kOk};
}

Outcome run_solve(const RunConfig& cfg) {
    const auto h = input_matrix(cfg);
    if (cfg.rhs.empty()) throw InvalidInput("--rhs is required for solve");
    const auto r = io::parse_rhs(io::read_file(cfg.rhs));
    if (cfg.backend == Backend::float64) {
        std::vector<Real> rf;
        for (const auto& x : r) rf.push_back(to_real(x));
        const auto hf = h.map(to_real);
        auto rep = solve_via_lu(hf, rf, FloatOptions{cfg.tol});
        if (cfg.format == OutputFormat::csv) return {column_csv(rep.x), kOk};
        json j = {{"backend", "float"},
                  {"method", "via-lu"},
                  {"relative_residual", relative_residual(hf, rep.x, rf)},
                  {"x", string_array(rep.x)}};
        return {dump(j), kOk};
    }
    auto rep = solve_via_lu(h, r);
    if (cfg.format == OutputFormat::csv) return {column_csv(rep.x), kOk};
    json j = {{"backend", "exact"},
              {"det", rep.det.to_string()},
              {"exact_residual", residual_is_zero(h, rep.x, r)},
              {"method", "via-lu"},
              {"pivot_overrides", rep.pivot_overrides},
              {"x", string_array(rep.x)}};
    return {dump(j), kOk};
}

Outcome run_gen(const RunConfig& cfg) {
    const auto h = random_instance(cfg.n, cfg.seed, cfg.profile);
    if (cfg.format == OutputFormat::csv) return {io::dense_to_csv(h.to_dense()), kOk};
    return {io::matrix_to_json(h), kOk};
}

struct Timed {
    double seconds;
    std::uint64_t ops;
};

Timed measure(const std::function<void()>& f) {
    ops::Tally tally;
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return {std::chrono::duration<double>(t1 - t0).count(), tally.count()};
}

Outcome run_bench(const RunConfig& cfg) {
    const auto h = cfg.input.empty() ? random_instance(cfg.n, cfg.seed, cfg.profile) : input_matrix(cfg);
    const bool exact = cfg.backend == Backend::exact;
    const auto hf = h.map(to_real);
    std::vector<Rational> r(static_cast<std::size_t>(h.order()), Rational(1));
    std::vector<Real> rf(r.size(), Real(1));

    std::vector<std::pair<std::string, std::function<void()>>> jobs = {
        {"det", [&] { exact ? (void)determinant(h) : (void)determinant(hf, FloatOptions{cfg.tol}); }},
        {"solve", [&] { exact ? (void)solve_via_lu(h, r) : (void)solve_via_lu(hf, rf, FloatOptions{cfg.tol}); }},
        {"inv",
         [&] {
             if (exact) {
                 InvertOptions o;
                 o.parallel_seeds = cfg.parallel_seeds;
                 (void)invert(h, o);
             } else {
                 (void)invert(hf, float_options(cfg));
             }
         }},
    };
    std::ostringstream os;
    os << "n,command,backend,wall_seconds,field_ops\n";
    for (const auto& [name, job] : jobs) {
        auto t = measure(job);
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.6f", t.seconds);
        os << h.order() << ',' << name << ',' << (exact ? "exact" : "float") << ',' << secs << ',' << t.ops << '\n';
    }
    return {os.str(), kOk};
}

Outcome run_oracle_check(const RunConfig& cfg) {
    const auto h = input_matrix(cfg);
    const auto report = oracle::analyze(h.to_dense());
    if (!report.nonsingular) {
        bool refused = false;
        try {
            (void)invert(h);
        } catch (const SingularMatrix&) {
            refused = true;
        }
        json j = {{"det_match", determinant(h).value == report.det}, {"refused", refused}, {"singular", true}};
        return {dump(j), refused ? kSingular : kInternal};
    }
    InvertOptions opt;
    opt.parallel_seeds = cfg.parallel_seeds;
    opt.apply_b_substitution = cfg.apply_b_substitution;
    auto r = invert(h, opt);
    auto diff = oracle::compare(r.inverse, *report.inverse);
    const bool det_match = r.det == report.det;
    json j = {{"det_match", det_match}, {"diff_count", diff.positions.size()}, {"singular", false}};
    return {dump(j), diff.empty() && det_match ? kOk : kInternal};
}

}  // namespace

Command parse_command(const std::string& name) {
    if (name == "det") return Command::det;
    if (name == "inv") return Command::inv;
    if (name == "solve") return Command::solve;
    if (name == "gen") return Command::gen;
    if (name == "bench") return Command::bench;
    if (name == "oracle-check") return Command::oracle_check;
    throw InvalidInput("unknown command \"" + name + "\"");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Outcome result;
    try {
        if (!(cfg.tol > 0)) throw InvalidInput("--tol must be positive");
        switch (cfg.command) {
            case Command::det: result = run_det(cfg); break;
            case Command::inv: result = run_inv(cfg); break;
            case Command::solve: result = run_solve(cfg); break;
            case Command::gen: result = run_gen(cfg); break;
            case Command::bench: result = run_bench(cfg); break;
            case Command::oracle_check: result = run_oracle_check(cfg); break;
        }
    } catch (const SingularMatrix& e) {
        err << "error: " << e.what() << "\n";
        result = singular_outcome();
    } catch (const NearSingularPivot& e) {
        err << "error: " << e.what() << "\n";
        result = {dump(json{{"error", e.what()}, {"singular", true}}), kSingular};
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }

    if (cfg.out.empty()) {
        out << result.text;
    } else {
        try {
            io::write_file(cfg.out, result.text);
        } catch (const InvalidInput& e) {
            err << "invalid input: " << e.what() << "\n";
            return kInvalidInput;
        }
    }
    return result.code;
}

}  // namespace chepta::cli
