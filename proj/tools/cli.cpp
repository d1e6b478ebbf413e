#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "numsg/hilbert.hpp"
#include "numsg/identities.hpp"
#include "numsg/oracle.hpp"
#include "numsg/sampling.hpp"

namespace numsg::cli {

namespace {

using json = nlohmann::ordered_json;

// Input problems that are not library errors (bad flags, unreadable files).
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) return {};
    auto end = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(begin, end - begin + 1));
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
    std::string t = trim(text);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw UsageError("invalid " + std::string(what) + " '" + t + "'");
    }
    return value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string join(const std::vector<std::int64_t>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

json poly_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const auto& [d, c] : p.terms()) arr.push_back(json::array({d, c.get_str()}));
    return arr;
}

json profile_json(const SemigroupProfile& prof) {
    return json{{"frobenius", prof.frobenius},
                {"conductor", prof.conductor},
                {"genus", prof.genus},
                {"gaps", prof.gaps}};
}

json check_json(const IdentityCheck& c) {
    json out;
    out["kind"] = c.kind == CheckKind::Real ? "real" : "cyclotomic";
    out["r"] = c.r;
    if (c.q) out["q"] = *c.q;
    if (c.n) out["n"] = *c.n;
    out["expected"] = c.expected;
    if (c.kind == CheckKind::Real)
        out["computed"] = c.computed;
    else
        out["computed"] = c.computed_coeffs;
    out["pass"] = c.pass;
    return out;
}

std::string check_text(const IdentityCheck& c) {
    std::ostringstream out;
    out << (c.kind == CheckKind::Real ? "real" : "cyclotomic") << " r=" << c.r;
    if (c.q) out << " q=" << *c.q;
    if (c.n) out << " n=" << *c.n;
    out << " expected=" << c.expected << " computed=" << c.computed << ' ' << (c.pass ? "pass" : "FAIL");
    return out.str();
}

std::string check_csv(const std::string& gens, const IdentityCheck& c) {
    return gens + ',' + (c.kind == CheckKind::Real ? "real" : "cyclotomic") + ',' + std::to_string(c.r) + ',' +
           (c.q ? std::to_string(*c.q) : "") + ',' + (c.n ? std::to_string(*c.n) : "") + ',' + c.expected + ',' +
           csv_field(c.computed) + ',' + (c.pass ? "true" : "false");
}

std::string dump_violation(const RunConfig& config, const std::vector<std::int64_t>& gens,
                           const IdentityViolationError& e) {
    namespace fs = std::filesystem;
    fs::path dir = config.dump_dir ? fs::path(*config.dump_dir) : fs::temp_directory_path();
    fs::create_directories(dir);
    fs::path path = dir / ("numsg-violation-" + join(gens, '-') + ".txt");
    std::ofstream(path) << e.dump();
    return path.string();
}

// Cross-checks the fast paths against the brute-force oracle.
json oracle_cross_check(const NumericalSemigroup& s, const SemigroupProfile& prof, const IntPolynomial& k,
                        const Limits& limits) {
    const std::int64_t g = oracle::oracle_frobenius(s, limits);
    if (g != prof.frobenius) {
        throw Error(ErrorCode::ConsistencyFailure, s.to_string() + ": oracle Frobenius " + std::to_string(g) +
                                                       " != " + std::to_string(prof.frobenius));
    }
    if (oracle::oracle_k_polynomial(s, limits) != k) {
        throw Error(ErrorCode::ConsistencyFailure, s.to_string() + ": oracle k-polynomial differs");
    }
    return json{{"frobenius", g}, {"agree", true}};
}

struct Outcome {
    int exit_code = 0;
    json doc;
    std::vector<std::string> text;
    std::vector<std::string> csv;
    std::string err;
};

const char* csv_header(Command c) {
    switch (c) {
        case Command::Info:
        case Command::KPoly: return "generators,frobenius,conductor,genus,p_poly,k_poly";
        case Command::Verify:
        case Command::VerifyComplex: return "generators,kind,r,q,n,expected,computed,pass";
        case Command::Sweep: return "index,generators,frobenius,theorem1_checks,theorem2_checks,pass";
    }
    return "";
}

Outcome run_entry(const RunConfig& config, const std::vector<std::int64_t>& raw) {
    Outcome out;
    const Limits& limits = config.limits;
    std::vector<std::int64_t> removed;
    auto semigroup = [&] {
        if (!config.auto_minimize) return make_semigroup(raw, limits);
        auto reduced = reduce_basis(raw, limits);
        removed = reduced.removed;
        return reduced.semigroup;
    }();
    const auto& gens = semigroup.generators();
    const std::string gens_csv = join(gens, ' ');

    out.doc["semigroup"] = gens;
    if (!removed.empty()) out.doc["removed"] = removed;
    out.text.push_back("semigroup=" + semigroup.to_string());
    if (!removed.empty()) out.text.push_back("removed=" + join(removed, ','));

    const auto apery = apery_set(semigroup, limits);

    if (config.command == Command::Info || config.command == Command::KPoly) {
        SemigroupProfile prof;
        IntPolynomial p, k;
        if (config.command == Command::Info) {
            auto data = consistency_check(semigroup, limits);
            prof = std::move(data.profile);
            p = std::move(data.p_poly);
            k = std::move(data.k_poly);
        } else {
            prof = profile(apery, limits);
            k = k_polynomial(semigroup, apery);
        }
        out.doc["profile"] = profile_json(prof);
        if (config.command == Command::Info) out.doc["p_poly"] = poly_json(p);
        out.doc["k_poly"] = poly_json(k);
        out.doc["checks"] = json::array();

        out.text.push_back("frobenius=" + std::to_string(prof.frobenius));
        out.text.push_back("conductor=" + std::to_string(prof.conductor));
        out.text.push_back("genus=" + std::to_string(prof.genus));
        out.text.push_back("gaps=" + join(prof.gaps, ','));
        if (config.command == Command::Info) out.text.push_back("p=" + p.to_string());
        out.text.push_back("k=" + k.to_string());
        if (config.command == Command::Info) out.text.push_back("hilbert=consistent");
        if (config.oracle) {
            out.doc["oracle"] = oracle_cross_check(semigroup, prof, k, limits);
            out.text.push_back("oracle=agree");
        }
        out.csv.push_back(csv_field(gens_csv) + ',' + std::to_string(prof.frobenius) + ',' +
                          std::to_string(prof.conductor) + ',' + std::to_string(prof.genus) + ',' +
                          csv_field(config.command == Command::Info ? p.to_string() : "") + ',' +
                          csv_field(k.to_string()));
        return out;
    }

    // verify / verify-complex
    const auto prof = profile(apery, limits);
    const auto k = k_polynomial(semigroup, apery);
    SignedDegreeSequence seq(k);
    if (config.betti_path) {
        seq = signed_sequence(BettiTable::parse(read_file(*config.betti_path)), semigroup, limits);
        out.doc["sequence_source"] = "betti";
    }
    out.doc["profile"] = profile_json(prof);
    out.doc["k_poly"] = poly_json(k);
    if (config.oracle) out.doc["oracle"] = oracle_cross_check(semigroup, prof, k, limits);

    IdentityReport report;
    if (config.command == Command::Verify) {
        report = verify_theorem1(semigroup, seq);
    } else if (config.q) {
        report = verify_theorem2(semigroup, seq, *config.q, config.n.value_or(1));
    } else {
        report = verify_theorem2_all(semigroup, seq);
    }

    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back(check_json(c));
        out.text.push_back(check_text(c));
        out.csv.push_back(check_csv(gens_csv, c));
    }
    out.doc["checks"] = std::move(checks);
    out.doc["pass"] = report.all_pass();
    if (config.oracle) out.text.push_back("oracle=agree");
    out.text.push_back("result=" + std::string(report.all_pass() ? "pass" : "FAIL") + " (" +
                       std::to_string(report.checks.size()) + " checks)");
    return out;
}

Outcome guarded_entry(const RunConfig& config, const std::string& label, const std::vector<std::int64_t>& raw) {
    try {
        return run_entry(config, raw);
    } catch (const IdentityViolationError& e) {
        Outcome out;
        out.exit_code = exit_code_for(e.code());
        std::string path = dump_violation(config, raw, e);
        out.err = label + ": IdentityViolation: dump written to " + path;
        out.doc = json{{"input", label}, {"error", {{"code", "IdentityViolation"}, {"dump", path}}}};
        return out;
    } catch (const Error& e) {
        Outcome out;
        out.exit_code = exit_code_for(e.code());
        out.err = label + ": " + std::string(to_string(e.code())) + ": " + e.what();
        out.doc = json{{"input", label}, {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
        return out;
    } catch (const std::invalid_argument& e) {
        Outcome out;
        out.exit_code = 2;
        out.err = label + ": " + e.what();
        out.doc = json{{"input", label}, {"error", {{"code", "InvalidInput"}, {"message", e.what()}}}};
        return out;
    }
}

std::string render_single_or_batch(const RunConfig& config, const std::vector<Outcome>& outcomes, bool batch) {
    std::ostringstream out;
    switch (config.format) {
        case Format::Json: {
            if (batch) {
                json arr = json::array();
                for (const auto& o : outcomes) arr.push_back(o.doc);
                out << arr.dump(2) << '\n';
            } else if (outcomes.front().exit_code == 0) {
                out << outcomes.front().doc.dump(2) << '\n';
            }
            break;
        }
        case Format::Csv: {
            out << csv_header(config.command) << '\n';
            for (const auto& o : outcomes)
                for (const auto& row : o.csv) out << row << '\n';
            break;
        }
        case Format::Text: {
            bool first = true;
            for (const auto& o : outcomes) {
                if (o.exit_code != 0) continue;
                if (!first) out << '\n';
                first = false;
                for (const auto& line : o.text) out << line << '\n';
            }
            break;
        }
    }
    return out.str();
}

RunResult run_sweep(const RunConfig& config) {
    const auto& sp = config.sweep;
    if (sp.count < 1) throw UsageError("--count must be at least 1");
    const std::uint64_t seed = config.seed.value_or(kDefaultSeed);
    SemigroupSampler sampler(seed, sp.m_min, sp.m_max, sp.d_max);

    json instances = json::array();
    std::vector<std::string> csv_rows;
    std::vector<double> millis;
    std::vector<std::string> failures;
    std::int64_t passed = 0;
    int exit_code = 0;

    for (std::int64_t i = 0; i < sp.count; ++i) {
        const auto s = sampler.next(config.limits);
        json entry{{"index", i}, {"semigroup", s.generators()}};
        const auto start = std::chrono::steady_clock::now();
        try {
            auto data = consistency_check(s, config.limits);
            SignedDegreeSequence seq(data.k_poly);
            auto t1 = verify_theorem1(s, seq);
            auto t2 = verify_theorem2_all(s, seq);
            if (config.oracle) oracle_cross_check(s, data.profile, data.k_poly, config.limits);
            entry["frobenius"] = data.profile.frobenius;
            entry["theorem1_checks"] = t1.checks.size();
            entry["theorem2_checks"] = t2.checks.size();
            entry["pass"] = true;
            ++passed;
        } catch (const Error& e) {
            entry["pass"] = false;
            entry["error"] = to_string(e.code());
            failures.push_back(s.to_string() + " " + std::string(to_string(e.code())) + ": " + e.what() +
                               "\n  replay: numsg verify " + join(s.generators(), ','));
            exit_code = std::max(exit_code, exit_code_for(e.code()));
        }
        millis.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
        csv_rows.push_back(std::to_string(i) + ',' + csv_field(join(s.generators(), ' ')) + ',' +
                           (entry.contains("frobenius") ? std::to_string(entry["frobenius"].get<std::int64_t>()) : "") +
                           ',' +
                           (entry.contains("theorem1_checks") ? std::to_string(entry["theorem1_checks"].get<std::size_t>()) : "") +
                           ',' +
                           (entry.contains("theorem2_checks") ? std::to_string(entry["theorem2_checks"].get<std::size_t>()) : "") +
                           ',' + (entry["pass"].get<bool>() ? "true" : "false"));
        instances.push_back(std::move(entry));
    }

    auto sorted = millis;
    std::sort(sorted.begin(), sorted.end());
    auto pct = [&](double p) {
        auto idx = static_cast<std::size_t>(p * static_cast<double>(sorted.size() - 1) + 0.5);
        return sorted[std::min(idx, sorted.size() - 1)];
    };
    double total = 0;
    for (double t : millis) total += t;
    std::ostringstream timing;
    timing.precision(3);
    timing << std::fixed << "timing_ms p50=" << pct(0.5) << " p90=" << pct(0.9) << " p99=" << pct(0.99)
           << " max=" << sorted.back() << " total=" << total;

    RunResult result;
    result.exit_code = exit_code;
    std::ostringstream out, err;
    switch (config.format) {
        case Format::Json: {
            json doc{{"seed", seed},
                     {"count", sp.count},
                     {"m_range", {sp.m_min, sp.m_max}},
                     {"dmax", sp.d_max},
                     {"oracle", config.oracle},
                     {"passed", passed},
                     {"failed", sp.count - passed},
                     {"instances", std::move(instances)}};
            out << doc.dump(2) << '\n';
            err << timing.str() << '\n';
            break;
        }
        case Format::Csv:
            out << csv_header(Command::Sweep) << '\n';
            for (const auto& row : csv_rows) out << row << '\n';
            err << timing.str() << '\n';
            break;
        case Format::Text:
            out << "sweep seed=" << seed << " count=" << sp.count << " m=" << sp.m_min << ".." << sp.m_max
                << " dmax=" << sp.d_max << " oracle=" << (config.oracle ? "on" : "off") << '\n'
                << "passed=" << passed << '/' << sp.count << '\n'
                << timing.str() << '\n';
            break;
    }
    for (const auto& f : failures) err << "FAIL " << f << '\n';
    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ResourceLimit: return 3;
        case ErrorCode::IdentityViolation:
        case ErrorCode::ConsistencyFailure:
        case ErrorCode::InexactDivision:
        case ErrorCode::OrderMismatch: return 4;
        default: return 2;
    }
}

std::vector<std::int64_t> parse_generators(std::string_view text) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_int(piece, "generator"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::string> parse_batch(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        auto v = parse_int(text, "range");
        return {v, v};
    }
    return {parse_int(text.substr(0, dots), "range start"), parse_int(text.substr(dots + 2), "range end")};
}

Limits limits_from_environment(Limits base) {
    if (const char* v = std::getenv("NUMSG_MAX_APERY_NODES")) base.max_apery_nodes = parse_int(v, "NUMSG_MAX_APERY_NODES");
    if (const char* v = std::getenv("NUMSG_MAX_DEGREE")) base.max_degree = parse_int(v, "NUMSG_MAX_DEGREE");
    return base;
}

RunResult run(const RunConfig& config) {
    try {
        if (config.command == Command::Sweep) return run_sweep(config);

        const bool has_gens = !config.generators.empty();
        if (has_gens == config.input_path.has_value()) {
            throw UsageError("give either a generator list or --input, not both or neither");
        }
        if (config.n && !config.q) throw UsageError("--n requires --q");
        if (config.command != Command::VerifyComplex && (config.q || config.n)) {
            throw UsageError("--q/--n only apply to verify-complex");
        }

        std::vector<Outcome> outcomes;
        if (has_gens) {
            outcomes.push_back(guarded_entry(config, join(config.generators, ','), config.generators));
        } else {
            for (const auto& line : parse_batch(read_file(*config.input_path))) {
                std::vector<std::int64_t> raw;
                try {
                    raw = parse_generators(line);
                } catch (const UsageError& e) {
                    Outcome bad;
                    bad.exit_code = 2;
                    bad.err = line + ": " + e.what();
                    bad.doc = json{{"input", line}, {"error", {{"code", "InvalidInput"}, {"message", e.what()}}}};
                    outcomes.push_back(std::move(bad));
                    continue;
                }
                outcomes.push_back(guarded_entry(config, line, raw));
            }
        }

        RunResult result;
        result.out = render_single_or_batch(config, outcomes, !has_gens);
        for (const auto& o : outcomes) {
            result.exit_code = std::max(result.exit_code, o.exit_code);
            if (!o.err.empty()) result.err += "error: " + o.err + '\n';
        }
        return result;
    } catch (const UsageError& e) {
        return RunResult{2, "", std::string("error: ") + e.what() + '\n'};
    } catch (const std::invalid_argument& e) {
        return RunResult{2, "", std::string("error: ") + e.what() + '\n'};
    } catch (const Error& e) {
        return RunResult{exit_code_for(e.code()), "",
                         "error: " + std::string(to_string(e.code())) + ": " + e.what() + '\n'};
    }
}

}  // namespace numsg::cli
