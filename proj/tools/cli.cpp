#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "golden_data.hpp"
#include "mfdecomp/decomp.hpp"
#include "mfdecomp/eisenstein.hpp"
#include "mfdecomp/errors.hpp"
#include "mfdecomp/group.hpp"
#include "mfdecomp/hilbert.hpp"
#include "mfdecomp/levels.hpp"
#include "mfdecomp/poly_parser.hpp"
#include "mfdecomp/ringalg.hpp"
#include "mfdecomp/weight1.hpp"

#ifndef MFDECOMP_VERSION_STRING
#define MFDECOMP_VERSION_STRING "unknown"
#endif

namespace mfd::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::int64_t> kHassePrimes{5, 13, 17, 29, 37, 41, 53, 61};
constexpr std::int64_t kHassePrecision = 60;

struct Options {
    std::string weight1_path;
    std::string format;
};

Weight1Data load_weight1(const Options& opts) {
    Weight1Data w1 = Weight1Data::builtin();
    if (!opts.weight1_path.empty())
        w1.merge_override_file(opts.weight1_path);
    return w1;
}

Json json_rational(const Rational& r) {
    return r.str();
}

Json json_valuation(const ExtendedValuation& v) {
    return v.str();
}

Json json_cyclotomic(const CyclotomicElement& x) {
    Json coords = Json::array();
    for (const auto& c : x.coords())
        coords.push_back(c.str());
    return coords;
}

std::string join_tab(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i)
        s += (i ? "\t" : "") + cells[i];
    return s;
}

// ---------------------------------------------------------------- table

std::vector<std::string> table_header(TableFlavor flavor) {
    std::vector<std::string> header{"n"};
    const std::string prefix = flavor == TableFlavor::Omega ? "l" : "k";
    if (flavor == TableFlavor::Omega)
        header.push_back("genus");
    for (std::size_t i = 0; i < flavor_width(flavor); ++i)
        header.push_back(prefix + std::to_string(i));
    return header;
}

std::vector<std::string> table_cells(TableFlavor flavor, const TableRow& row) {
    std::vector<std::string> cells{std::to_string(row.n)};
    if (flavor == TableFlavor::Omega)
        cells.push_back(std::to_string(row.genus));
    for (auto v : row.mult)
        cells.push_back(std::to_string(v));
    return cells;
}

std::string render_tsv(TableFlavor flavor, const std::vector<TableRow>& rows) {
    std::string s = join_tab(table_header(flavor)) + "\n";
    for (const auto& r : rows)
        s += join_tab(table_cells(flavor, r)) + "\n";
    return s;
}

std::string render_markdown(TableFlavor flavor, const std::vector<TableRow>& rows) {
    auto line = [](const std::vector<std::string>& cells) {
        std::string s = "|";
        for (const auto& c : cells)
            s += " " + c + " |";
        return s + "\n";
    };
    const auto header = table_header(flavor);
    std::string s = line(header);
    s += line(std::vector<std::string>(header.size(), "---"));
    for (const auto& r : rows)
        s += line(table_cells(flavor, r));
    return s;
}

Json table_json(TableFlavor flavor, std::int64_t from, std::int64_t to, const std::vector<TableRow>& rows) {
    Json doc;
    doc["flavor"] = flavor_name(flavor);
    doc["from"] = from;
    doc["to"] = to;
    doc["rows"] = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["n"] = r.n;
        if (flavor == TableFlavor::Omega)
            row["genus"] = r.genus;
        row["mult"] = r.mult;
        doc["rows"].push_back(std::move(row));
    }
    return doc;
}

// ---------------------------------------------------------------- verify

class Verifier {
  public:
    Verifier(std::ostream& out, const std::string& suite) : out_(out), suite_(suite) {}

    void record(const std::string& name, bool passed, const std::string& detail = {}) {
        out_ << (passed ? "PASS " : "FAIL ") << suite_ << ": " << name;
        if (!passed && !detail.empty())
            out_ << ": " << detail;
        out_ << "\n";
        (passed ? passed_ : failed_)++;
        if (!passed && !first_failure_)
            first_failure_ = suite_ + ": " + name + (detail.empty() ? "" : ": " + detail);
    }

    /// Runs `body`, recording a failure if it throws a library error.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const Weight1Unavailable&) {
            throw;
        } catch (const Error& e) {
            record(name, false, e.what());
        }
    }

    void set_suite(const std::string& suite) { suite_ = suite; }
    int passed() const { return passed_; }
    int failed() const { return failed_; }
    const std::optional<std::string>& first_failure() const { return first_failure_; }

  private:
    std::ostream& out_;
    std::string suite_;
    int passed_ = 0;
    int failed_ = 0;
    std::optional<std::string> first_failure_;
};

std::string first_line_difference(std::string_view expected, std::string_view actual) {
    std::istringstream a{std::string(expected)}, b{std::string(actual)};
    std::string la, lb;
    for (int line = 1;; ++line) {
        const bool ha = static_cast<bool>(std::getline(a, la));
        const bool hb = static_cast<bool>(std::getline(b, lb));
        if (!ha && !hb)
            return "outputs differ in trailing bytes";
        if (ha != hb || la != lb)
            return "line " + std::to_string(line) + ": expected '" + (ha ? la : "<eof>") + "', got '" +
                   (hb ? lb : "<eof>") + "'";
    }
}

void verify_decomp(Verifier& v, const Weight1Data& w1) {
    struct Golden {
        TableFlavor flavor;
        std::int64_t from, to;
        std::string_view text;
    };
    for (const auto& g : {Golden{TableFlavor::Omega, 2, 42, golden_omega()},
                          Golden{TableFlavor::Level2, 4, 23, golden_level2()},
                          Golden{TableFlavor::Level3, 5, 23, golden_level3()}}) {
        const std::string name = flavor_name(g.flavor) + " table n=" + std::to_string(g.from) + ".." +
                                 std::to_string(g.to) + " matches reference";
        v.guarded(name, [&] {
            const auto tsv = render_tsv(g.flavor, table_generate(g.from, g.to, g.flavor, w1));
            v.record(name, tsv == g.text, tsv == g.text ? "" : first_line_difference(g.text, tsv));
        });
    }

    for (const auto& [key, entry] : w1.entries()) {
        const CongruenceGroup g(key.first, key.second);
        if (weight1_vanishes(g) && entry.s1 != 0)
            v.record("weight-1 entry for " + g.str() + " consistent with vanishing criterion", false,
                     "table gives s1=" + std::to_string(entry.s1) + " but s1 must vanish");
    }

    for (std::int64_t n = 2; n <= 42; ++n) {
        const auto g = CongruenceGroup::gamma1(n);
        for (BlockTag tag : {BlockTag::OmegaPowers, BlockTag::Level2, BlockTag::Level3, BlockTag::Level4,
                             BlockTag::Level5or6}) {
            if (!block_supported(g, tag))
                continue;
            const std::string label = g.str() + " " + BaseBlock{tag}.name();
            v.guarded(label + " closed form", [&] {
                const auto seq = decomposition(g, tag, w1);
                const auto oracle = deconvolution_oracle(g, tag, w1);
                v.record(label + " closed form equals deconvolution", seq.mult == oracle);
                const auto report = verify_consistency(seq, w1);
                const auto* bad = report.first_failure();
                v.record(label + " consistency (" + std::to_string(report.checks.size()) + " checks)", !bad,
                         bad ? bad->name + " (" + bad->detail + ")" : "");
            });
        }
    }
    for (std::int64_t n : {2, 3, 5, 11, 23, 36}) {
        const auto g = CongruenceGroup::gamma0(n);
        v.guarded(g.str() + " omega", [&] {
            const auto report = verify_consistency(omega_decomposition(g, w1), w1);
            const auto* bad = report.first_failure();
            v.record(g.str() + " omega consistency", !bad, bad ? bad->name + " (" + bad->detail + ")" : "");
        });
    }

    v.guarded("Gamma1(31) over Gamma1(7) block", [&] {
        const std::int64_t top = 60;
        const DimensionTable target(CongruenceGroup::gamma1(31), w1, top);
        const DimensionTable block(CongruenceGroup::gamma1(7), w1, top);
        try {
            deconvolve(HilbertFunction(target.m_values()), HilbertFunction(block.m_values()), 40, top);
            v.record("Gamma1(31) does not decompose into Gamma1(7) blocks", false, "deconvolution succeeded");
        } catch (const NegativeMultiplicity& e) {
            v.record("Gamma1(31) does not decompose into Gamma1(7) blocks (negative at shift " +
                         std::to_string(e.shift()) + ")",
                     true);
        }
    });
    for (std::int64_t q : {7, 8, 9, 11, 13}) {
        const auto report = obstruction_search(q, 1000);
        v.record("q=" + std::to_string(q) + " has at least 5 obstruction primes below 1000",
                 report.primes.size() >= 5, std::to_string(report.primes.size()) + " found");
    }
}

std::int64_t classical_dim(std::int64_t k) {
    if (k < 0 || k % 2 != 0)
        return 0;
    return k / 12 + (k % 12 == 2 ? 0 : 1);
}

void verify_wproj(Verifier& v) {
    std::int64_t cases = 0;
    std::optional<std::string> violation;
    for (std::int64_t a = 1; a <= 12; ++a) {
        for (std::int64_t b = 1; b <= 12; ++b) {
            const auto r = serre_duality_check(WeightedLine(a, b), -60, 60);
            cases += r.checked;
            if (!r.holds && !violation)
                violation = "P(" + std::to_string(a) + "," + std::to_string(b) + ") m=" +
                            std::to_string(*r.first_violation);
        }
    }
    v.record("h0(m) = h1(-m-a-b) for 1<=a,b<=12, |m|<=60 (" + std::to_string(cases) + " cases)", !violation,
             violation.value_or(""));
    std::optional<std::int64_t> bad;
    for (std::int64_t k = 0; k <= 60 && !bad; ++k)
        if (h0_dim(WeightedLine(4, 6), k) != classical_dim(k))
            bad = k;
    v.record("h0 on P(4,6) equals dim M_k(SL2(Z)) for k<=60", !bad, bad ? "k=" + std::to_string(*bad) : "");
}

void verify_ringalg(Verifier& v) {
    for (const auto& name : free_basis_preset_names()) {
        v.guarded("free basis " + name, [&] {
            const auto p = free_basis_preset(name);
            const auto bound = std::max<std::int64_t>(p.bound, 48);
            const auto c = verify_free_basis(p.ambient, p.subring, p.basis, bound);
            v.record("free basis " + name + " (rank " + std::to_string(p.basis.size()) + ", bound " +
                         std::to_string(bound) + ")",
                     c.free && c.hilbert_identity,
                     c.failing_degree ? "fails in degree " + std::to_string(*c.failing_degree) : "");
        });
    }
    for (const auto& p : regular_sequence_presets()) {
        const auto r = verify_regular_sequence(p.algebra, p.elements);
        const bool ok = r.regular == p.expected_regular && r.hilbert_criterion == p.expected_regular;
        v.record("regular sequence " + p.name + " is " + (p.expected_regular ? "regular" : "not regular"), ok,
                 "got " + r.verdict());
    }
    for (const auto& name : weierstrass_preset_names()) {
        const auto r = weierstrass_identity_check(weierstrass_preset(name));
        const auto names = weierstrass_preset(name).algebra.names();
        v.record("c4^3 - c6^2 = 1728 delta for " + name, r.holds, "residual " + r.residual.str(names));
    }
    auto perturbed = weierstrass_preset("gamma1-3");
    perturbed.delta = parse_polynomial("a1^3*a3^3 - 26*a3^4", perturbed.algebra.names());
    v.record("perturbed delta is rejected", !weierstrass_identity_check(perturbed).holds);
}

void verify_hasse(Verifier& v) {
    for (auto p : kHassePrimes) {
        v.guarded("p=" + std::to_string(p), [&] {
            const auto claim = valuation_claim_check(p);
            v.record("p=" + std::to_string(p) + " v2(L) + v2(1-zeta) = 1", claim.sum_is_one,
                     "v2(L)=" + claim.v2_l.str());
            v.record("p=" + std::to_string(p) + " L congruent to 1+zeta+...+zeta^(2^(m-1)-1) mod 2",
                     claim.congruence_holds);
            const auto lift = hasse_lift(p, kHassePrecision);
            v.record("p=" + std::to_string(p) + " F = 1 mod 2 through q^" + std::to_string(kHassePrecision),
                     lift.passed, lift.first_failure ? "q^" + std::to_string(*lift.first_failure) : "");
        });
    }
}

// ---------------------------------------------------------------- commands

int cmd_levels(const std::string& spec, const Options& opts, std::ostream& out) {
    const auto g = CongruenceGroup::parse(spec);
    const auto inv = invariants(g);
    if (opts.format == "json") {
        Json doc;
        doc["group"] = g.str();
        doc["index"] = inv.index;
        doc["omega_degree"] = json_rational(inv.omega_degree);
        doc["cusps"] = inv.cusps;
        doc["elliptic2"] = inv.elliptic2;
        doc["elliptic3"] = inv.elliptic3;
        doc["genus"] = inv.genus;
        out << doc.dump(2) << "\n";
    } else {
        out << "group=" << g.str() << " index=" << inv.index << " omega_degree=" << inv.omega_degree
            << " cusps=" << inv.cusps << " elliptic2=" << inv.elliptic2 << " elliptic3=" << inv.elliptic3
            << " genus=" << inv.genus << "\n";
    }
    return kOk;
}

int cmd_dims(const std::string& spec, std::int64_t top, const Options& opts, std::ostream& out) {
    const auto g = CongruenceGroup::parse(spec);
    const DimensionTable dims(g, load_weight1(opts), top);
    if (opts.format == "json") {
        Json doc;
        doc["group"] = g.str();
        doc["m"] = dims.m_values();
        Json s = Json::array();
        for (std::int64_t k = 0; k <= top; ++k)
            s.push_back(dims.s(k));
        doc["s"] = s;
        out << doc.dump(2) << "\n";
        return kOk;
    }
    out << "k\tm_k\ts_k\n";
    for (std::int64_t k = 0; k <= top; ++k)
        out << k << "\t" << dims.m(k) << "\t" << dims.s(k) << "\n";
    return kOk;
}

int cmd_decompose(const std::string& spec, const std::string& block_name, const Options& opts, std::ostream& out) {
    const auto g = CongruenceGroup::parse(spec);
    const auto block = parse_block(block_name);
    const auto w1 = load_weight1(opts);
    const auto seq = decomposition(g, block, w1);
    const auto report = verify_consistency(seq, w1);
    const auto width = static_cast<std::size_t>(BaseBlock{block}.max_shift() + 1);
    if (opts.format == "json") {
        Json doc;
        doc["group"] = g.str();
        doc["block"] = BaseBlock{block}.name();
        doc["mult"] = seq.mult.padded(width);
        doc["checks"] = Json::array();
        for (const auto& c : report.checks)
            doc["checks"].push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out << doc.dump(2) << "\n";
    } else {
        out << g.str() << " " << BaseBlock{block}.name() << ":";
        for (auto x : seq.mult.padded(width))
            out << " " << x;
        out << "\n";
        for (const auto& c : report.checks)
            out << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.detail << "]\n";
    }
    return report.passed() ? kOk : kCheckFailed;
}

int cmd_table(const std::string& flavor_text, std::int64_t from, std::int64_t to, const Options& opts,
              std::ostream& out) {
    const auto flavor = parse_flavor(flavor_text);
    if (from > to)
        throw ParseError("--from must not exceed --to");
    const auto rows = table_generate(from, to, flavor, load_weight1(opts));
    if (opts.format == "json")
        out << table_json(flavor, from, to, rows).dump(2) << "\n";
    else if (opts.format == "markdown")
        out << render_markdown(flavor, rows);
    else
        out << render_tsv(flavor, rows);
    return kOk;
}

int cmd_verify(const std::string& suite, const Options& opts, std::ostream& out) {
    static const std::vector<std::string> kSuites{"decomp", "wproj", "ringalg", "hasse"};
    std::vector<std::string> run;
    if (suite == "all")
        run = kSuites;
    else if (std::find(kSuites.begin(), kSuites.end(), suite) != kSuites.end())
        run = {suite};
    else
        throw ParseError("unknown suite '" + suite + "'");
    const auto w1 = load_weight1(opts);
    Verifier v(out, "");
    for (const auto& s : run) {
        v.set_suite(s);
        if (s == "decomp")
            verify_decomp(v, w1);
        else if (s == "wproj")
            verify_wproj(v);
        else if (s == "ringalg")
            verify_ringalg(v);
        else
            verify_hasse(v);
    }
    out << "summary: " << v.passed() << " passed, " << v.failed() << " failed\n";
    if (v.first_failure())
        out << "first failure: " << *v.first_failure() << "\n";
    return v.failed() ? kCheckFailed : kOk;
}

Json hasse_json(const HasseLiftReport& r, bool series) {
    Json doc;
    doc["p"] = r.p;
    doc["m"] = r.m;
    doc["l_value"] = json_cyclotomic(r.l_value);
    doc["v2_l"] = json_valuation(r.v2_l);
    doc["paper_exponent"] = json_rational(r.stated_exponent);
    doc["computed_exponent"] = json_rational(r.computed_exponent);
    doc["precision"] = r.precision;
    doc["verdict"] = r.passed ? "pass" : "fail";
    if (series) {
        Json f = Json::array();
        for (const auto& comp : r.components) {
            Json c = Json::array();
            for (const auto& x : comp)
                c.push_back(x.str());
            f.push_back(std::move(c));
        }
        doc["components"] = std::move(f);
        Json avg = Json::array();
        for (const auto& x : r.averaged)
            avg.push_back(x.str());
        doc["averaged"] = std::move(avg);
    }
    return doc;
}

int cmd_hasse(std::int64_t p, std::int64_t prec, bool series, const Options& opts, std::ostream& out) {
    const auto r = hasse_lift(p, prec);
    if (opts.format == "text") {
        out << "p=" << r.p << " m=" << r.m << " L=" << r.l_value.str() << " v2_l=" << r.v2_l.str()
            << " paper_exponent=" << r.stated_exponent << " computed_exponent=" << r.computed_exponent
            << " precision=" << r.precision << " verdict=" << (r.passed ? "pass" : "fail") << "\n";
    } else {
        out << hasse_json(r, series).dump(2) << "\n";
    }
    return r.passed ? kOk : kCheckFailed;
}

int cmd_wproj(const std::string& what, std::int64_t a, std::int64_t b, std::int64_t m, std::ostream& out) {
    const WeightedLine line(a, b);
    if (what == "h0") {
        out << h0_dim(line, m) << "\n";
        return kOk;
    }
    if (what == "h1") {
        out << h1_dim(line, m) << "\n";
        return kOk;
    }
    if (what == "serre") {
        if (m < 0)
            throw ParseError("serre takes a nonnegative radius");
        const auto r = serre_duality_check(line, -m, m);
        out << "checked=" << r.checked << " holds=" << (r.holds ? "true" : "false");
        if (r.first_violation)
            out << " first_violation=" << *r.first_violation;
        out << "\n";
        return r.holds ? kOk : kCheckFailed;
    }
    throw ParseError("wproj expects h0, h1 or serre");
}

int cmd_obstruct(std::int64_t q, std::int64_t bound, const Options& opts, std::ostream& out) {
    if (q <= 6)
        throw ParseError("--q must exceed 6");
    const auto r = obstruction_search(q, bound);
    if (opts.format == "json") {
        Json doc;
        doc["q"] = r.q;
        doc["d_q"] = r.d_q;
        doc["divisor"] = r.divisor;
        doc["residue"] = r.residue;
        doc["residue_class_consistent"] = r.residue_class_consistent;
        doc["primes"] = Json::array();
        for (const auto& w : r.primes)
            doc["primes"].push_back(Json{{"p", w.p}, {"d_p", w.d_p}, {"divisible", w.divisible}});
        doc["residue_class_primes"] = r.residue_class_primes;
        out << doc.dump(2) << "\n";
        return kOk;
    }
    out << "q=" << r.q << " d_q=" << r.d_q << " divisor=" << r.divisor << " residue=" << r.residue
        << " residue_class_consistent=" << (r.residue_class_consistent ? "true" : "false") << "\n";
    out << "p\td_p\tdivisible\n";
    for (const auto& w : r.primes)
        out << w.p << "\t" << w.d_p << "\t" << (w.divisible ? "yes" : "no") << "\n";
    return kOk;
}

int cmd_freebasis(const std::string& preset, const std::string& file, std::optional<std::int64_t> bound,
                  const Options& opts, std::ostream& out) {
    if (preset.empty() == file.empty())
        throw ParseError("give exactly one of --preset or --file");
    const auto p = preset.empty() ? parse_free_basis_file(file) : free_basis_preset(preset);
    const auto d = bound.value_or(p.bound);
    const auto c = verify_free_basis(p.ambient, p.subring, p.basis, d);
    if (opts.format == "json") {
        Json doc;
        doc["name"] = p.name;
        doc["field"] = p.ambient.field().str();
        doc["rank"] = p.basis.size();
        doc["basis_degrees"] = c.basis_degrees;
        doc["bound"] = c.bound;
        doc["verdict"] = c.verdict();
        doc["hilbert_identity"] = c.hilbert_identity;
        doc["failing_degree"] = c.failing_degree ? Json(*c.failing_degree) : Json(nullptr);
        doc["spanning_failed"] = c.spanning_failed;
        doc["independence_failed"] = c.independence_failed;
        out << doc.dump(2) << "\n";
    } else {
        out << "name=" << p.name << " field=" << p.ambient.field().str() << " rank=" << p.basis.size()
            << " bound=" << c.bound << " verdict=" << c.verdict()
            << " hilbert_identity=" << (c.hilbert_identity ? "true" : "false");
        if (c.failing_degree)
            out << " failing_degree=" << *c.failing_degree << " spanning_failed=" << c.spanning_failed
                << " independence_failed=" << c.independence_failed;
        out << "\n";
    }
    return c.free ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decompositions of rings of modular forms into standard blocks"};
    app.name("mfdecomp");
    app.require_subcommand(0, 1);
    app.allow_windows_style_options(false);

    Options opts;
    bool version = false;
    app.add_option("--weight1", opts.weight1_path, "Weight-1 cusp form override file (lines: kind level s1)");
    app.add_flag("--version", version, "Print the version to stderr");

    std::string group_text, block_name = "omega", flavor = "omega", suite = "all", what, preset, file;
    std::int64_t top = 12, from = 2, to = 42, prime = 5, prec = kHassePrecision, a = 1, b = 1, m = 0, q = 7,
                 bound = 1000;
    std::optional<std::int64_t> basis_bound;
    bool series = false;

    auto* levels = app.add_subcommand("levels", "Index, cusps, elliptic points and genus");
    levels->add_option("group", group_text, "g0:N, g1:N or g:N")->required();
    levels->add_option("--format", opts.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* dims = app.add_subcommand("dims", "Dimensions m_k and s_k");
    dims->add_option("group", group_text)->required();
    dims->add_option("--to", top, "Largest weight")->check(CLI::Range(0, 10000));
    dims->add_option("--format", opts.format)->check(CLI::IsMember({"tsv", "json"}));

    auto* decompose = app.add_subcommand("decompose", "Decomposition sequence with consistency checks");
    decompose->add_option("group", group_text)->required();
    decompose->add_option("--block", block_name, "omega, level2, level3, level4, level5or6");
    decompose->add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));

    auto* table = app.add_subcommand("table", "Decomposition tables for Gamma1(n)");
    table->add_option("--flavor", flavor)->check(CLI::IsMember({"omega", "level2", "level3"}));
    table->add_option("--from", from)->check(CLI::Range(2, 100000));
    table->add_option("--to", to)->check(CLI::Range(2, 100000));
    table->add_option("--format", opts.format)->check(CLI::IsMember({"tsv", "json", "markdown"}));

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "decomp", "wproj", "ringalg", "hasse"}));

    auto* hasse = app.add_subcommand("hasse", "Lift of the Hasse invariant from a weight-1 Eisenstein series");
    hasse->add_option("--prime", prime)->required();
    hasse->add_option("--prec", prec)->check(CLI::Range(1, 100000));
    hasse->add_flag("--series", series, "Include the f_i and F coefficients");
    hasse->add_option("--format", opts.format)->check(CLI::IsMember({"json", "text"}));

    auto* wproj = app.add_subcommand("wproj", "Line bundle cohomology on P(a,b)");
    wproj->add_option("what", what, "h0, h1 or serre")->required()->check(CLI::IsMember({"h0", "h1", "serre"}));
    wproj->add_option("a", a)->required()->check(CLI::Range(1, 1000000));
    wproj->add_option("b", b)->required()->check(CLI::Range(1, 1000000));
    wproj->add_option("m", m, "twist, or radius for serre")->required()->check(CLI::Range(-1000000, 1000000));

    auto* obstruct = app.add_subcommand("obstruct", "Primes p with d_q not dividing d_p");
    obstruct->add_option("--q", q)->required();
    obstruct->add_option("--bound", bound)->check(CLI::Range(2, 10000000));
    obstruct->add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));

    auto* freebasis = app.add_subcommand("freebasis", "Free-basis certificate for a polynomial ring over a subring");
    freebasis->add_option("--preset", preset, "f2-gamma1-3, f3-gamma1-2, q-gamma1-2, q-gamma1-3");
    freebasis->add_option("--file", file, "Problem file");
    freebasis->add_option("--bound", basis_bound, "Degree bound")->check(CLI::Range(0, 400));
    freebasis->add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (version) {
        err << "mfdecomp " << MFDECOMP_VERSION_STRING << "\n";
        if (app.get_subcommands().empty())
            return kOk;
    }

    try {
        if (!opts.weight1_path.empty())
            load_weight1(opts);
        if (*levels)
            return cmd_levels(group_text, opts, out);
        if (*dims)
            return cmd_dims(group_text, top, opts, out);
        if (*decompose)
            return cmd_decompose(group_text, block_name, opts, out);
        if (*table)
            return cmd_table(flavor, from, to, opts, out);
        if (*verify)
            return cmd_verify(suite, opts, out);
        if (*hasse)
            return cmd_hasse(prime, prec, series, opts, out);
        if (*wproj)
            return cmd_wproj(what, a, b, m, out);
        if (*obstruct)
            return cmd_obstruct(q, bound, opts, out);
        if (*freebasis)
            return cmd_freebasis(preset, file, basis_bound, opts, out);
        err << app.help();
        return kUsage;
    } catch (const Weight1Unavailable& e) {
        err << "error: " << e.what() << "\n";
        return kDataUnavailable;
    } catch (const DecompositionInvalid& e) {
        err << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const IntegralityFailure& e) {
        err << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace mfd::cli
