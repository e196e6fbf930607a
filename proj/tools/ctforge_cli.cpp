#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ctforge/ar_quiver.hpp"
#include "ctforge/report.hpp"

using namespace ctforge;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kVerification = 3;

struct Options {
    std::string format;
    std::string out;
    bool seedless = false;
    bool timing = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<std::size_t> env_budget() {
    const char* s = std::getenv("CTFORGE_BUDGET");
    if (!s || !*s) return std::nullopt;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        if (!std::isdigit(static_cast<unsigned char>(s[0]))) throw std::invalid_argument(s);
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw UsageError(std::string("CTFORGE_BUDGET must be a nonnegative integer, got '") + s + "'");
    }
    if (pos != std::string(s).size()) throw UsageError(std::string("CTFORGE_BUDGET must be a nonnegative integer, got '") + s + "'");
    return static_cast<std::size_t>(v);
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + opt.out);
    f << text;
}

std::string report_format(const Options& opt) {
    std::string f = opt.format.empty() ? "text" : opt.format;
    if (f != "text" && f != "json") throw UsageError("--format must be text or json for this command, got " + f);
    return f;
}

DynkinDiagram parse_diagram(const std::string& family, int rank) { return dynkin_diagram(parse_family(family), rank); }

using Clock = std::chrono::steady_clock;

void stamp(RunReport& r, const Options& opt, Clock::time_point t0) {
    if (!opt.timing) return;
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    r.timing = {{"wall_ms", ms}};
}

std::string yes_no(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "-"; }

int cmd_classify_trivext(const Options& opt, const std::string& family, int rank, int d_min, int d_max) {
    const auto fmt = report_format(opt);
    auto t0 = Clock::now();
    auto g = parse_diagram(family, rank);
    const std::size_t budget = env_budget().value_or(kDefaultTrivextBudget);
    auto c = classify_trivial_extension(g, d_min, d_max, budget);

    RunReport r;
    r.command = "classify-trivext";
    r.inputs = {{"family", family_letter(g.family())}, {"rank", rank}, {"d_min", d_min}, {"d_max", d_max}, {"budget", budget}};
    r.results = to_json(c);
    stamp(r, opt, t0);
    if (fmt == "json") {
        write_output(opt, dump(r));
    } else {
        std::ostringstream s;
        s << "T(k" << c.diagram << "), h = " << c.coxeter << ", " << c.domain_size << " orbit objects\n";
        s << std::left << std::setw(5) << "d" << std::setw(14) << "rep-finite" << std::setw(15) << "method"
          << "certificates\n";
        for (const auto& row : c.rows)
            s << std::setw(5) << row.d << std::setw(14) << yes_no(row.representation_finite) << std::setw(15) << row.method
              << row.certificate_count << "\n";
        write_output(opt, s.str());
    }
    for (const auto& row : c.rows)
        if (row.method == "not-attempted")
            std::cerr << "ctforge: warning: d=" << row.d << " not attempted (domain " << c.domain_size << " > budget "
                      << budget << ")\n";
    return kOk;
}

int cmd_classify_nakayama(const Options& opt, int a, int n, int d_max, const std::string& mode) {
    const auto fmt = report_format(opt);
    if (mode != "numeric" && mode != "bruteforce" && mode != "both")
        throw UsageError("mode must be numeric, bruteforce or both, got " + mode);
    auto t0 = Clock::now();
    const bool numeric = mode != "bruteforce", brute = mode != "numeric";
    const std::size_t budget = env_budget().value_or(kDefaultNakayamaBudget);
    auto c = classify_nakayama(a, n, d_max, numeric, brute, budget);

    RunReport r;
    r.command = "classify-nakayama";
    r.inputs = {{"a", a}, {"n", n}, {"d_max", d_max}, {"mode", mode}, {"budget", budget}};
    r.results = to_json(c, numeric, brute);

    int code = kOk;
    std::ostringstream errs;
    for (const auto& row : c.rows) {
        if (numeric && row.numeric != row.predicate) {
            errs << "ctforge: mismatch at (a,n,d) = (" << a << "," << n << "," << row.d << "): conditions give "
                 << row.numeric << ", theorem list gives " << row.predicate << "\n";
            code = kVerification;
        }
        if (brute && !row.bruteforce_attempted)
            errs << "ctforge: warning: d=" << row.d << " bruteforce not attempted (" << NakayamaAlgebra(a, n).nonprojective_count()
                 << " non-projectives > budget " << budget << ")\n";
        if (numeric && brute && row.bruteforce && *row.bruteforce != row.numeric) {
            errs << "ctforge: mismatch at (a,n,d) = (" << a << "," << n << "," << row.d << "): numeric " << row.numeric
                 << ", bruteforce " << *row.bruteforce;
            if (!row.certificates.empty()) errs << ", witness " << to_json(row.certificates.front()).dump();
            errs << "\n";
            code = kVerification;
        }
    }
    stamp(r, opt, t0);
    if (fmt == "json") {
        write_output(opt, dump(r));
    } else {
        std::ostringstream s;
        s << NakayamaAlgebra(a, n).name() << ", Loewy length " << a * n + 1 << "\n";
        s << std::left << std::setw(5) << "d";
        if (numeric) s << std::setw(6) << "(a)" << std::setw(6) << "(b)" << std::setw(9) << "numeric" << std::setw(9) << "theorem";
        if (brute) s << std::setw(16) << "bruteforce" << "sets";
        s << "\n";
        for (const auto& row : c.rows) {
            s << std::setw(5) << row.d;
            if (numeric)
                s << std::setw(6) << (row.condition_a ? "yes" : "no") << std::setw(6) << (row.condition_b ? "yes" : "no")
                  << std::setw(9) << (row.numeric ? "yes" : "no") << std::setw(9) << (row.predicate ? "yes" : "no");
            if (brute) s << std::setw(16) << (row.bruteforce_attempted ? yes_no(row.bruteforce) : "not attempted") << row.set_count;
            s << "\n";
        }
        write_output(opt, s.str());
    }
    std::cerr << errs.str();
    return code;
}

int cmd_verify_example(const Options& opt, const std::string& name) {
    const auto fmt = report_format(opt);
    auto t0 = Clock::now();
    auto ex = named_example(name);
    auto cert = verify_named_example(ex);

    RunReport r;
    r.command = "verify-example";
    r.inputs = {{"name", name}};
    r.results = {{"name", ex.name}, {"description", ex.description}, {"certificate", to_json(cert)}};
    stamp(r, opt, t0);
    if (fmt == "json") {
        write_output(opt, dump(r));
    } else {
        std::ostringstream s;
        s << ex.name << ": " << ex.description << "\n";
        s << cert.algebra << ", d = " << cert.d << ", objects (vertex,twist_mod):";
        for (const auto& [v, t] : cert.objects) s << " (" << v << "," << t << ")";
        s << "\n";
        for (const auto& ch : cert.checks) {
            s << "  " << ch.kind << " degree " << ch.degree << " value " << ch.value;
            for (const auto& [v, t] : ch.pair) s << " (" << v << "," << t << ")";
            s << "\n";
        }
        s << "verdict: " << (cert.verdict ? "cluster-tilting" : "FAILED") << "\n";
        write_output(opt, s.str());
    }
    if (!cert.verdict) {
        std::cerr << "ctforge: " << name << " failed: " << first_failure(cert) << "\n";
        return kVerification;
    }
    return kOk;
}

int cmd_emit_ar_quiver(const Options& opt, const std::string& family, int rank, Int window, const std::string& marked) {
    const std::string fmt = opt.format.empty() ? "dot" : opt.format;
    if (fmt != "dot" && fmt != "json" && fmt != "ascii")
        throw UsageError("--format must be dot, json or ascii for emit-ar-quiver, got " + fmt);
    auto g = parse_diagram(family, rank);
    std::vector<OrbitObject> objs;
    if (marked != "none") {
        auto ex = named_example(marked);
        if (ex.diagram.name() != g.name())
            throw UsageError("certificate " + marked + " belongs to " + ex.diagram.name() + ", not " + g.name());
        auto cert = verify_named_example(ex);
        if (!cert.verdict) throw VerificationFailure(marked + " failed: " + first_failure(cert));
        objs = ex.objects;
    }
    auto quiver = build_ar_quiver(default_orientation(g), window, objs, marked);
    if (fmt == "dot")
        write_output(opt, emit_dot(quiver));
    else if (fmt == "json")
        write_output(opt, to_json(quiver).dump(2) + "\n");
    else
        write_output(opt, emit_ascii(quiver));
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster-tilting classification for trivial extensions of Dynkin type and symmetric Nakayama algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "text|json for reports, dot|json|ascii for emit-ar-quiver");
    app.add_option("--out", opt.out, "write output to FILE instead of stdout");
    app.add_flag("--seedless", opt.seedless, "reserved; rejected (nothing here is randomized)");
    app.add_flag("--timing", opt.timing, "record wall-clock time in the report");
    app.set_version_flag("--version", std::string(CTFORGE_VERSION));

    std::string family, mode, name, marked;
    int rank = 0, d_min = 0, d_max = 0, a = 0, n = 0;
    Int window = 0;

    auto* trivext = app.add_subcommand("classify-trivext", "d-representation-finiteness of T(kQ) for d in [DMIN, DMAX]");
    trivext->add_option("FAMILY", family)->required();
    trivext->add_option("RANK", rank)->required();
    trivext->add_option("DMIN", d_min)->required();
    trivext->add_option("DMAX", d_max)->required();

    auto* nak = app.add_subcommand("classify-nakayama", "d-representation-finiteness of B(a, n) for d in [2, DMAX]");
    nak->add_option("A", a)->required();
    nak->add_option("N", n)->required();
    nak->add_option("DMAX", d_max)->required();
    nak->add_option("MODE", mode)->required();

    auto* verify = app.add_subcommand("verify-example", "verify cta1:<n>, cta2, cta3, ctd or d4-derived");
    verify->add_option("NAME", name)->required();

    auto* emit = app.add_subcommand("emit-ar-quiver", "draw a window of ZQ with a named example marked");
    emit->add_option("FAMILY", family)->required();
    emit->add_option("RANK", rank)->required();
    emit->add_option("WINDOW", window, "number of tau-steps shown")->required();
    emit->add_option("MARKED", marked, "example name or none")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (opt.seedless) throw UsageError("--seedless is reserved: no computation here uses a random seed");
        if (*trivext) return cmd_classify_trivext(opt, family, rank, d_min, d_max);
        if (*nak) return cmd_classify_nakayama(opt, a, n, d_max, mode);
        if (*verify) return cmd_verify_example(opt, name);
        if (*emit) return cmd_emit_ar_quiver(opt, family, rank, window, marked);
    } catch (const UsageError& e) {
        std::cerr << "ctforge: error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        std::cerr << "ctforge: error: " << e.what() << "\n";
        return kUsage;
    } catch (const VerificationFailure& e) {
        std::cerr << "ctforge: verification failed: " << e.what() << "\n";
        return kVerification;
    } catch (const std::exception& e) {
        std::cerr << "ctforge: internal error: " << e.what() << "\n";
        return 1;
    }
    return kUsage;
}
