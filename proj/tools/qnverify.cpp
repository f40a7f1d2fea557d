#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnalg/qnalg.hpp"

using namespace qnalg;

namespace {

std::uint64_t parse_field(const std::string& f) {
    if (f == "rational") return 0;
    if (f.rfind("gfp:", 0) == 0) {
        const std::string digits = f.substr(4);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("--field gfp:P needs a numeric modulus");
        const std::uint64_t p = std::stoull(digits);
        prime_field check(p);  // validates the range
        return p;
    }
    throw std::invalid_argument("--field must be 'rational' or 'gfp:P'");
}

void emit(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write output file " + path);
    out << content;
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        std::string tok = s.substr(start, comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (!tok.empty()) out.push_back(tok);
        start = comma + 1;
    }
    return out;
}

quadratic_presentation build_algebra(const std::string& algebra, int n) {
    if (algebra == "qn") return make_qn(n);
    if (algebra == "xn") return make_xn(n);
    if (algebra == "qn_dual") return make_qn_dual(n);
    if (algebra == "gr_dual") return make_gr_dual(n);
    throw std::invalid_argument("unknown algebra: " + algebra);
}

struct dims_args {
    int n = 2;
    int max_degree = 4;
    std::string method = "engine";
    std::string algebra = "qn";
    std::string format = "text";
    std::string field = "rational";
    std::string cache_path;
    std::string output;
    bool verify_cache = false;
    unsigned jobs = default_jobs();
};

int run_dims(const dims_args& a) {
    const std::uint64_t prime = parse_field(a.field);
    const bool primal = a.algebra == "qn" || a.algebra == "xn";

    std::optional<quadratic_presentation> pres;
    if (a.method == "engine") pres.emplace(build_algebra(a.algebra, a.n));
    std::optional<truncated_series> series;
    if (a.method == "series")
        series.emplace(primal ? theorem1_series(a.n, a.max_degree)
                              : theorem2_series(a.n, a.max_degree));

    auto compute = [&](int i) -> Int {
        if (a.method == "engine")
            return prime ? pres->dim_component_mod(i, prime) : pres->dim_component(i);
        if (a.method == "strings")
            return primal ? count_family(a.n, family_spec::y(), i) : dual_dim_count(a.n, i);
        return as_integer((*series)[i]);
    };

    std::optional<dim_cache> cache;
    if (!a.cache_path.empty()) cache.emplace(a.cache_path);
    std::mutex cache_mu;

    std::vector<Int> dims(a.max_degree + 1);
    std::vector<std::string> mismatches;
    run_indexed_jobs(a.jobs, dims.size(), [&](std::size_t i) {
        const std::string key = dim_cache::key(a.algebra, a.n, static_cast<int>(i), a.field);
        std::optional<Int> cached;
        if (cache) {
            std::lock_guard lock(cache_mu);
            cached = cache->lookup(key);
        }
        if (cached && !a.verify_cache) {
            dims[i] = *cached;
            return;
        }
        const Int fresh = compute(static_cast<int>(i));
        dims[i] = fresh;
        std::lock_guard lock(cache_mu);
        if (cached && *cached != fresh)
            mismatches.push_back(key + ": cached " + to_string(*cached) + " vs fresh " +
                                 to_string(fresh));
        if (cache) cache->store(key, fresh);
    });
    if (cache) cache->save();

    std::string out;
    if (a.format == "json") {
        nlohmann::json j;
        j["algebra"] = a.algebra;
        j["n"] = a.n;
        j["method"] = a.method;
        j["field"] = a.field;
        j["dims"] = nlohmann::json::array();
        for (int i = 0; i <= a.max_degree; ++i)
            j["dims"].push_back({{"degree", i}, {"dim", to_string(dims[i])}});
        out = j.dump(2) + "\n";
    } else if (a.format == "csv") {
        out = "algebra,n,degree,dim,method\n";
        for (int i = 0; i <= a.max_degree; ++i)
            out += a.algebra + "," + std::to_string(a.n) + "," + std::to_string(i) + "," +
                   to_string(dims[i]) + "," + a.method + "\n";
    } else {
        out = "algebra=" + a.algebra + " n=" + std::to_string(a.n) + " method=" + a.method +
              " field=" + a.field + "\n";
        for (int i = 0; i <= a.max_degree; ++i)
            out += "degree " + std::to_string(i) + ": " + to_string(dims[i]) + "\n";
    }
    emit(out, a.output);

    for (const auto& m : mismatches) std::cerr << "cache mismatch: " << m << "\n";
    return mismatches.empty() ? 0 : 1;
}

struct verify_args {
    int n = 2;
    int max_degree = 4;
    int trunc = 20;
    std::string checks;
    std::string format = "text";
    std::string field = "rational";
    std::string output;
    unsigned jobs = default_jobs();
    unsigned seed = 0;
};

int run_verify(const verify_args& a) {
    verify_options o;
    o.n = a.n;
    o.max_degree = a.max_degree;
    o.trunc = a.trunc;
    o.prime = parse_field(a.field);
    o.jobs = a.jobs;
    o.seed = a.seed;

    const std::vector<std::string> names =
        a.checks.empty() ? all_check_names() : split_csv_list(a.checks);
    const auto reports = run_checks(names, o);

    std::string out;
    if (a.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(r.full());
        out = arr.dump(2) + "\n";
    } else if (a.format == "csv") {
        out = "check,desc,expected,actual,pass\n";
        for (const auto& r : reports) out += r.csv();
    } else {
        int failed = 0;
        for (const auto& r : reports) {
            out += r.text();
            if (!r.pass()) ++failed;
        }
        out += failed == 0 ? "all checks passed\n"
                           : std::to_string(failed) + " of " + std::to_string(reports.size()) +
                                 " checks failed\n";
    }
    emit(out, a.output);

    for (const auto& r : reports)
        if (!r.pass()) return 1;
    return 0;
}

struct series_args {
    std::string which = "qn";
    int n = 2;
    int trunc = 20;
    std::string format = "text";
    std::string output;
};

int run_series(const series_args& a) {
    truncated_series s = a.which == "qn"        ? theorem1_series(a.n, a.trunc)
                         : a.which == "qn_dual" ? theorem2_series(a.n, a.trunc)
                                                : cor49_series(a.n, a.trunc);
    std::string out;
    if (a.format == "json") {
        nlohmann::json j;
        j["which"] = a.which;
        j["n"] = a.n;
        j["trunc"] = a.trunc;
        j["coeffs"] = nlohmann::json::array();
        for (int i = 0; i <= a.trunc; ++i) j["coeffs"].push_back(to_string(s[i]));
        out = j.dump(2) + "\n";
    } else if (a.format == "csv") {
        out = "which,n,degree,coeff\n";
        for (int i = 0; i <= a.trunc; ++i)
            out += a.which + "," + std::to_string(a.n) + "," + std::to_string(i) + "," +
                   to_string(s[i]) + "\n";
    } else {
        out = s.str() + "\n";
    }
    emit(out, a.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dimension and identity checker for subset-indexed quadratic algebras"};
    app.require_subcommand(1);

    dims_args da;
    auto* dims = app.add_subcommand("dims", "graded dimension table by a chosen oracle");
    dims->add_option("--n", da.n, "ambient set size")->required()->check(CLI::Range(0, max_ambient));
    dims->add_option("--max-degree", da.max_degree, "top degree of the table")
        ->check(CLI::Range(0, 64));
    dims->add_option("--method", da.method, "oracle: engine, strings or series")
        ->check(CLI::IsMember({"engine", "strings", "series"}));
    dims->add_option("--algebra", da.algebra, "which algebra")
        ->check(CLI::IsMember({"qn", "qn_dual", "xn", "gr_dual"}));
    dims->add_option("--format", da.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    dims->add_option("--field", da.field, "rational or gfp:P (probabilistic accelerator)");
    dims->add_option("--cache", da.cache_path, "dimension cache file");
    dims->add_flag("--verify-cache", da.verify_cache, "recompute cached entries and compare");
    dims->add_option("--jobs", da.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    dims->add_option("--output", da.output, "write the table to a file instead of stdout");

    verify_args va;
    auto* verify = app.add_subcommand("verify", "run cross-oracle identity checks");
    verify->add_option("--n", va.n, "ambient set size")->required()->check(CLI::Range(0, max_ambient));
    verify->add_option("--max-degree", va.max_degree, "top degree for engine-side checks")
        ->check(CLI::Range(0, 64));
    verify->add_option("--trunc", va.trunc, "series truncation order")->check(CLI::Range(0, 4096));
    verify->add_option("--checks", va.checks,
                       "comma-separated subset of: theorem1,theorem2,dual-presentation,"
                       "normal-form,section4,lemma62,lemma63,koszul,basis,cor65");
    verify->add_option("--format", va.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--field", va.field, "rational or gfp:P (probabilistic accelerator)");
    verify->add_option("--jobs", va.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    verify->add_option("--seed", va.seed, "seed for sampled property checks");
    verify->add_option("--output", va.output, "write the report to a file instead of stdout");

    series_args sa;
    auto* series = app.add_subcommand("series", "closed-form series coefficients");
    series->add_option("--which", sa.which, "qn, qn_dual or cor49")
        ->check(CLI::IsMember({"qn", "qn_dual", "cor49"}));
    series->add_option("--n", sa.n, "ambient set size")->required()->check(CLI::Range(0, max_ambient));
    series->add_option("--trunc", sa.trunc, "series truncation order")->check(CLI::Range(0, 4096));
    series->add_option("--format", sa.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    series->add_option("--output", sa.output, "write coefficients to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (dims->parsed()) return run_dims(da);
        if (verify->parsed()) return run_verify(va);
        if (series->parsed()) return run_series(sa);
        return 2;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
