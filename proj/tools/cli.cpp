#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cyclowed/smith.hpp"

namespace cyclowed::cli {

namespace {

/// Bad parameters or input; exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Limits {
    std::int64_t max_degree = 128;
    std::int64_t max_m = 64;
};

Limits limits_from_env()
{
    Limits l;
    if (const char* v = std::getenv("CYCLOWED_MAX_DEGREE")) {
        char* end = nullptr;
        const long long x = std::strtoll(v, &end, 10);
        if (end == v || *end != '\0' || x < 1)
            throw UsageError("CYCLOWED_MAX_DEGREE must be a positive integer");
        l.max_degree = l.max_m = x;
    }
    return l;
}

std::int64_t checked_pn(std::int64_t p, int n, const Limits& lim)
{
    if (p < 2 || !is_prime(p))
        throw UsageError("--p must be a prime");
    if (n < 1)
        throw UsageError("--n must be at least 1");
    std::int64_t pn = 1;
    for (int k = 0; k < n; ++k) {
        if (pn > lim.max_degree / p)
            throw UsageError("p^n exceeds the ceiling " + std::to_string(lim.max_degree) + " (set CYCLOWED_MAX_DEGREE)");
        pn *= p;
    }
    return pn;
}

std::int64_t checked_m(std::int64_t m, const Limits& lim)
{
    if (m < 1)
        throw UsageError("--m must be positive");
    if (m > lim.max_m)
        throw UsageError("m exceeds the ceiling " + std::to_string(lim.max_m) + " (set CYCLOWED_MAX_DEGREE)");
    return m;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError("malformed JSON in " + path + ": " + e.what());
    }
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string r;
    for (std::size_t k = 0; k < v.size(); ++k)
        r += (k ? sep : "") + v[k];
    return r;
}

std::vector<std::string> strings(const std::vector<Valuation>& v)
{
    std::vector<std::string> r;
    for (const auto& x : v)
        r.push_back(x.to_string());
    return r;
}

std::vector<std::string> strings(const std::vector<Integer>& v)
{
    std::vector<std::string> r;
    for (const auto& x : v)
        r.push_back(x.get_str());
    return r;
}

Json valuations_json(const std::vector<Valuation>& v)
{
    Json r = Json::array();
    for (const auto& x : v)
        r.push_back(x.value());
    return r;
}

Json integers_json(const std::vector<Integer>& v)
{
    Json r = Json::array();
    for (const auto& x : v)
        r.push_back(integer_to_json(x));
    return r;
}

/// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    auto display = [](const std::string& s) {
        // Count code points so that z, ζ and • align.
        std::size_t n = 0;
        for (unsigned char c : s)
            n += (c & 0xC0) != 0x80;
        return n;
    };
    for (const auto& r : rows)
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (width.size() <= k)
                width.push_back(0);
            width[k] = std::max(width[k], display(r[k]));
        }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t k = 0; k < r.size(); ++k) {
            line += r[k];
            if (k + 1 < r.size())
                line += std::string(width[k] - display(r[k]) + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

std::string matrix_text(const CycMatrix& a)
{
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<std::string> r;
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.push_back(a(i, j).to_string("z"));
        rows.push_back(std::move(r));
    }
    return table(rows);
}

/// "2^9 * 3^4" over the primes of m.
std::string factored(Integer a, std::int64_t m)
{
    std::vector<std::string> parts;
    for (auto p : prime_divisors(m)) {
        int e = 0;
        while (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
            a /= p;
            ++e;
        }
        if (e)
            parts.push_back(std::to_string(p) + (e > 1 ? "^" + std::to_string(e) : ""));
    }
    if (a != 1 || parts.empty())
        parts.push_back(a.get_str());
    return join(parts, " * ");
}

Json descriptor_json(const HochschildDescriptor& d)
{
    switch (d.kind) {
    case HochschildDescriptor::Kind::FreeRankOne:
        return Json{{"kind", "free_rank_one"}};
    case HochschildDescriptor::Kind::Zero:
        return Json{{"kind", "zero"}};
    case HochschildDescriptor::Kind::TModTPower:
        break;
    }
    return Json{{"kind", "t_mod_t_power"}, {"exponent", d.exponent}};
}

CommandResult eldiv_result(const std::string& name, std::int64_t p, int n, bool oracle,
                           const std::vector<Valuation>& closed, const std::function<std::vector<Valuation>()>& snf,
                           const Integer& det)
{
    CommandResult r;
    r.payload = Json{{"embedding", name}, {"p", p}, {"n", n}, {"closed_form", valuations_json(closed)}, {"determinant_valuation", integer_to_json(det)}};
    std::vector<std::vector<std::string>> rows{{"closed form", join(strings(closed), " ")}};
    if (oracle) {
        const auto s = snf();
        const bool agree = s == closed;
        r.payload["oracle"] = valuations_json(s);
        r.payload["agree"] = agree;
        rows.push_back({"smith form", join(strings(s), " ")});
        rows.push_back({"verdict", agree ? "agree" : "DISAGREE"});
        if (!agree)
            r.status = Status::Violation;
    }
    rows.push_back({"det valuation", det.get_str()});
    r.text = name + " p=" + std::to_string(p) + " n=" + std::to_string(n) + "\n" + table(rows);
    return r;
}

std::string km_report_text(const KMReport& rep)
{
    std::string s;
    for (const auto& v : rep.violations)
        s += "  violated: l=" + std::to_string(v.l) + " j=" + std::to_string(v.j) + " mod " + v.modulus.get_str() +
             ": lhs " + v.lhs_residue.get_str() + ", rhs " + v.rhs_residue.get_str() + "\n";
    return s;
}

struct Options {
    bool json = false;
    std::int64_t p = 0;
    int n = 0;
    std::int64_t m = 0;
    bool oracle = false;
    std::string input;
    std::string generator = "one-minus-zeta";
    std::optional<std::int64_t> twist;
    int max_degree = 5;
    bool cohomology = false;
    long max_i = 0;
    bool lambda = false;
    std::string suite = "all";
    std::optional<std::size_t> trials;
    std::uint64_t seed = 1;
};

} // namespace

Json to_json(const CommandResult& r)
{
    const char* status = r.status == Status::Ok ? "ok" : r.status == Status::Violation ? "violation" : "error";
    return Json{{"command", r.command}, {"status", status}, {"payload", r.payload}, {"timing_ms", r.timing_ms}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    std::function<CommandResult(const Limits&)> action;

    CLI::App app{"Exact elementary divisors, ties and identities for cyclotomic and Wedderburn embeddings", "cyclowed"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Print the command result as JSON");

    auto pn_options = [&o](CLI::App* s, bool required) {
        auto* p = s->add_option("--p", o.p, "Prime p");
        auto* n = s->add_option("--n", o.n, "Exponent n");
        if (required) {
            p->required();
            n->required();
        }
    };

    // eldiv
    auto* eldiv = app.add_subcommand("eldiv", "Elementary divisors by closed form, optionally against the Smith form");
    eldiv->require_subcommand(1);
    for (const char* kind : {"dedekind", "wedderburn", "absolute"}) {
        auto* s = eldiv->add_subcommand(kind, std::string("Elementary divisors of the ") + kind + " embedding");
        pn_options(s, true);
        s->add_flag("--oracle", o.oracle, "Compare with the Smith normal form");
        const std::string k = kind;
        s->callback([&, k] {
            action = [&o, k](const Limits& lim) {
                checked_pn(o.p, o.n, lim);
                if (k == "dedekind")
                    return eldiv_result(k, o.p, o.n, o.oracle, dedekind_eldiv_closed_forms(o.p, o.n),
                                        [&] { return smith_valuations_dvr(dedekind_matrix(o.p, o.n), o.p, o.n); },
                                        dedekind_det_valuation(o.p, o.n));
                if (k == "wedderburn")
                    return eldiv_result(k, o.p, o.n, o.oracle, wedderburn_eldiv_closed_forms(o.p, o.n),
                                        [&] { return smith_valuations_dvr(wedderburn_matrix(o.p, o.n), o.p, o.n); },
                                        wedderburn_det_valuation(o.p, o.n));
                CommandResult r;
                const auto closed = absolute_eldiv_z(o.p, o.n);
                const Integer index = absolute_index(o.p, o.n);
                r.payload = Json{{"embedding", k}, {"p", o.p}, {"n", o.n}, {"closed_form", integers_json(closed)}, {"index", integer_to_json(index)}};
                std::vector<std::vector<std::string>> rows{{"closed form", join(strings(closed), " ")}};
                if (o.oracle) {
                    const auto s = smith_divisors_z(absolute_matrix(o.p, o.n));
                    const bool agree = s == closed;
                    r.payload["oracle"] = integers_json(s);
                    r.payload["agree"] = agree;
                    rows.push_back({"smith form", join(strings(s), " ")});
                    rows.push_back({"verdict", agree ? "agree" : "DISAGREE"});
                    if (!agree)
                        r.status = Status::Violation;
                }
                rows.push_back({"index", index.get_str()});
                r.text = k + " p=" + std::to_string(o.p) + " n=" + std::to_string(o.n) + "\n" + table(rows);
                return r;
            };
        });
    }

    // ties
    auto* ties = app.add_subcommand("ties", "Tie systems describing the image");
    ties->require_subcommand(1);
    {
        auto* s = ties->add_subcommand("dedekind", "Ties of the cyclotomic Dedekind embedding");
        pn_options(s, true);
        s->callback([&] {
            action = [&o](const Limits& lim) {
                checked_pn(o.p, o.n, lim);
                const TieSystem t = dedekind_ties(o.p, o.n);
                CommandResult r;
                r.payload = to_json(t);
                for (const auto& c : t.congruences())
                    r.text += c.to_string() + "\n";
                return r;
            };
        });
        s = ties->add_subcommand("wedderburn", "Ties of the cyclic Wedderburn embedding");
        pn_options(s, false);
        s->add_option("--m", o.m, "Order m (alternative to --p/--n)");
        s->callback([&] {
            action = [&o](const Limits& lim) {
                const std::int64_t m = o.m ? checked_m(o.m, lim) : checked_pn(o.p, o.n, lim);
                const TieSystem t = wedderburn_ties(m);
                CommandResult r;
                r.payload = to_json(t);
                for (const auto& c : t.congruences())
                    r.text += c.to_string() + "\n";
                return r;
            };
        });
        s = ties->add_subcommand("absolute", "Ties of the absolute Wedderburn embedding of Z C_{p^n}");
        pn_options(s, true);
        s->callback([&] {
            action = [&o](const Limits& lim) {
                checked_pn(o.p, o.n, lim);
                CommandResult r;
                Json cong = Json::array(), text = Json::array();
                for (const auto& c : km_ties(o.p, o.n)) {
                    cong.push_back(to_json(c));
                    text.push_back(c.render());
                    r.text += c.render() + "\n";
                }
                r.payload = Json{{"p", o.p}, {"n", o.n}, {"congruences", cong}, {"text", text}};
                return r;
            };
        });
    }

    // check
    auto* check = app.add_subcommand("check", "Membership of a tuple in the image");
    check->require_subcommand(1);
    {
        auto* s = check->add_subcommand("absolute", "Check a tuple against the absolute ties");
        s->add_option("--input", o.input, "JSON file with the tuple")->required();
        s->add_flag("--oracle", o.oracle, "Compare with the inversion formula");
        s->callback([&] {
            action = [&o](const Limits& lim) {
                const AbsoluteTuple t = absolute_tuple_from_json(read_json_file(o.input));
                checked_pn(t.prime(), std::max(t.level(), 1), lim);
                const KMReport rep = km_ties_check(t);
                CommandResult r;
                r.payload = Json{{"tuple", to_json(t)}, {"report", to_json(rep)}};
                r.text = std::string(rep.holds ? "member" : "not a member") + "\n" + km_report_text(rep);
                if (!rep.holds)
                    r.status = Status::Violation;
                if (o.oracle) {
                    const bool oracle = absolute_image_membership_oracle(t);
                    r.payload["oracle"] = oracle;
                    r.payload["agree"] = oracle == rep.holds;
                    r.text += std::string("inversion formula: ") + (oracle ? "member" : "not a member") +
                              (oracle == rep.holds ? ", agree\n" : ", DISAGREE\n");
                    if (oracle != rep.holds)
                        r.status = Status::Violation;
                }
                return r;
            };
        });
        s = check->add_subcommand("composite", "Check a tuple for composite m via prime power slices");
        s->add_option("--m", o.m, "Order m")->required();
        s->add_option("--input", o.input, "JSON file with the tuple")->required();
        s->callback([&] {
            action = [&o](const Limits& lim) {
                checked_m(o.m, lim);
                const CompositeTuple t = composite_tuple_from_json(read_json_file(o.input));
                if (t.m != o.m)
                    throw UsageError("--m " + std::to_string(o.m) + " does not match m = " + std::to_string(t.m) + " in the input");
                const CompositeReport rep = composite_membership(t);
                CommandResult r;
                r.payload = to_json(rep);
                std::vector<std::vector<std::string>> rows;
                for (const auto& c : rep.checks)
                    rows.push_back({c.holds ? "holds" : "FAILS", c.description});
                r.text = table(rows) + (rep.member ? "member\n" : "not a member\n");
                if (!rep.member)
                    r.status = Status::Violation;
                return r;
            };
        });
    }

    // basis
    auto* basis = app.add_subcommand("basis", "Image basis matrices");
    basis->require_subcommand(1);
    {
        auto* s = basis->add_subcommand("dedekind", "Triangular basis of the Dedekind image");
        pn_options(s, true);
        s->add_option("--generator", o.generator, "one-minus-zeta or zeta")->check(CLI::IsMember({"one-minus-zeta", "zeta"}));
        s->callback([&] {
            action = [&o](const Limits& lim) {
                checked_pn(o.p, o.n, lim);
                const CycMatrix b = dedekind_image_basis(o.p, o.n, o.generator == "zeta" ? Generator::Zeta : Generator::OneMinusZeta);
                return CommandResult{"", Status::Ok, to_json(b), 0, matrix_text(b)};
            };
        });
        s = basis->add_subcommand("wedderburn", "q-Pascal basis of the cyclic Wedderburn image");
        pn_options(s, false);
        s->add_option("--m", o.m, "Order m");
        s->callback([&] {
            action = [&o](const Limits& lim) {
                const std::int64_t m = o.m ? checked_m(o.m, lim) : checked_pn(o.p, o.n, lim);
                const CycMatrix b = wedderburn_image_basis(m);
                return CommandResult{"", Status::Ok, to_json(b), 0, matrix_text(b)};
            };
        });
        s = basis->add_subcommand("w1", "Basis xi_{m,0}, ..., xi_{m,m-1} of the first order Pascal tie ring");
        pn_options(s, false);
        s->add_option("--m", o.m, "Order m");
        s->callback([&] {
            action = [&o](const Limits& lim) {
                const std::int64_t m = o.m ? checked_m(o.m, lim) : checked_pn(o.p, o.n, lim);
                const CycMatrix b = w1_basis(m);
                return CommandResult{"", Status::Ok, to_json(b), 0, matrix_text(b)};
            };
        });
    }

    // hochschild
    {
        auto* s = app.add_subcommand("hochschild", "Twisted Hochschild (co)homology of T over S");
        pn_options(s, true);
        s->add_option("--twist", o.twist, "Unit i for sigma_i (default: all units)");
        s->add_option("--max-degree", o.max_degree, "Largest degree")->required()->check(CLI::Range(0, 1000));
        s->add_flag("--cohomology", o.cohomology, "Cohomology instead of homology");
        s->callback([&] {
            action = [&o](const Limits& lim) {
                const std::int64_t pn = checked_pn(o.p, o.n, lim);
                std::vector<std::int64_t> twists;
                if (o.twist) {
                    if (*o.twist < 1 || *o.twist >= pn || *o.twist % o.p == 0)
                        throw UsageError("--twist must be a unit in [1, p^n - 1]");
                    twists.push_back(*o.twist);
                } else {
                    twists = unit_indices(o.p, o.n);
                }
                const auto variant = o.cohomology ? HochschildVariant::Cohomology : HochschildVariant::Homology;
                CommandResult r;
                Json rows = Json::array();
                std::vector<std::vector<std::string>> text{{"twist", "degree", o.cohomology ? "H^j" : "H_j"}};
                for (auto tw : twists)
                    for (int j = 0; j <= o.max_degree; ++j) {
                        const HochschildDescriptor d = hochschild(o.p, o.n, tw, j, variant);
                        rows.push_back(Json{{"twist", tw}, {"degree", j}, {"descriptor", descriptor_json(d)}, {"text", d.to_string()}});
                        text.push_back({std::to_string(tw), std::to_string(j), d.to_string()});
                    }
                const long phi = hochschild_phi(o.p, o.n);
                r.payload = Json{{"p", o.p}, {"n", o.n}, {"variant", o.cohomology ? "cohomology" : "homology"}, {"phi", phi}, {"rows", rows}};
                r.text = "phi = " + std::to_string(phi) + "\n" + table(text);
                return r;
            };
        });
    }

    // radical-series
    {
        auto* s = app.add_subcommand("radical-series", "Dimensions of R / rad^{i+1} R over the residue field");
        pn_options(s, true);
        s->add_option("--max-i", o.max_i, "Largest i")->required()->check(CLI::Range(0L, 100000L));
        s->add_flag("--lambda", o.lambda, "Use Lambda instead of the first order Pascal tie ring");
        s->callback([&] {
            action = [&o](const Limits& lim) {
                checked_pn(o.p, o.n, lim);
                std::vector<std::string> dims;
                Json arr = Json::array();
                for (long i = 0; i <= o.max_i; ++i) {
                    const long d = o.lambda ? lambda_radical_layers(o.p, o.n, i) : w1_radical_layer_dim(o.p, o.n, i);
                    dims.push_back(std::to_string(d));
                    arr.push_back(d);
                }
                CommandResult r;
                r.payload = Json{{"p", o.p}, {"n", o.n}, {"ring", o.lambda ? "lambda" : "w1"}, {"dims", arr}};
                r.text = join(dims, ",") + "\n";
                return r;
            };
        });
    }

    // verify
    {
        auto* s = app.add_subcommand("verify", "Run a property suite");
        s->add_option("--suite", o.suite, "vandermonde, qpascal, toperators or all")
            ->check(CLI::IsMember({"vandermonde", "qpascal", "toperators", "all"}));
        s->add_option("--trials", o.trials, "Random trials per check")->check(CLI::Range(1, 100000));
        s->add_option("--seed", o.seed, "Random seed");
        s->callback([&] {
            action = [&o](const Limits&) {
                std::vector<SuiteReport> reports;
                if (o.suite == "vandermonde" || o.suite == "all")
                    reports.push_back(vandermonde_suite(o.trials.value_or(50), o.seed));
                if (o.suite == "qpascal" || o.suite == "all")
                    reports.push_back(qpascal_suite(o.trials.value_or(20), o.seed));
                if (o.suite == "toperators" || o.suite == "all")
                    reports.push_back(toperator_suite(o.trials.value_or(100), o.seed));
                CommandResult r;
                Json arr = Json::array();
                std::vector<std::vector<std::string>> rows;
                for (const auto& rep : reports) {
                    arr.push_back(to_json(rep));
                    for (const auto& c : rep.checks)
                        rows.push_back({rep.suite, c.name, std::to_string(c.passed) + "/" + std::to_string(c.total)});
                    if (!rep.ok())
                        r.status = Status::Violation;
                }
                r.payload = Json{{"seed", o.seed}, {"suites", arr}};
                r.text = table(rows);
                return r;
            };
        });
    }

    // index, discriminant
    for (const char* kind : {"index", "discriminant"}) {
        auto* s = app.add_subcommand(kind, std::string(kind) == "index" ? "Index of the absolute Wedderburn embedding"
                                                                         : "Absolute value of the discriminant of Z[zeta_m]");
        s->add_option("--m", o.m, "Order m")->required();
        const std::string k = kind;
        s->callback([&, k] {
            action = [&o, k](const Limits& lim) {
                const std::int64_t m = checked_m(o.m, lim);
                const Integer value = k == "index" ? absolute_index_m(m) : discriminant_magnitude(m);
                Integer lhs = absolute_index_m(m) * absolute_index_m(m);
                for (auto d : divisors(m))
                    lhs *= discriminant_magnitude(d);
                const Integer rhs = zpow(m, static_cast<unsigned long>(m));
                CommandResult r;
                r.payload = Json{{"m", m},
                                 {k, integer_to_json(value)},
                                 {"factored", factored(value, m)},
                                 {"consistency", Json{{"index_squared_times_discriminants", integer_to_json(lhs)},
                                                      {"m_to_the_m", integer_to_json(rhs)},
                                                      {"holds", lhs == rhs}}}};
                r.text = table({{k, value.get_str() + (value > 1 ? " = " + factored(value, m) : "")},
                                {"index^2 * prod_{d|m} |disc_d| = m^m", lhs == rhs ? "holds" : "FAILS"}});
                if (lhs != rhs)
                    r.status = Status::Violation;
                return r;
            };
        });
    }

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Computational experiments");
    experiment->require_subcommand(1);
    {
        auto* s = experiment->add_subcommand("w2-subring", "Closure of the second order Pascal tie ring under products");
        pn_options(s, true);
        s->callback([&] {
            action = [&o](const Limits& lim) {
                checked_pn(o.p, o.n, lim);
                if (o.n < 2)
                    throw UsageError("w2-subring needs n >= 2");
                const SubringReport rep = w2_subring_experiment(o.p, o.n);
                CommandResult r;
                Json failures = Json::array();
                for (const auto& [a, b] : rep.failures)
                    failures.push_back(Json::array({a, b}));
                r.payload = Json{{"p", o.p}, {"n", o.n}, {"products", rep.products}, {"closed", rep.closed},
                                 {"subring", rep.failures.empty()}, {"failures", failures}};
                r.text = std::to_string(rep.closed) + "/" + std::to_string(rep.products) +
                         " products of basis elements stay in the ring\n";
                for (const auto& [a, b] : rep.failures)
                    r.text += "  leaves the ring: rows " + std::to_string(a) + ", " + std::to_string(b) + "\n";
                return r;
            };
        });
    }

    CommandResult result;
    result.command = join(args, " ");
    const auto start = std::chrono::steady_clock::now();
    int code = exit_ok;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        const Limits lim = limits_from_env();
        CommandResult r = action(lim);
        r.command = result.command;
        result = std::move(r);
        code = result.status == Status::Ok ? exit_ok : exit_violation;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        result.status = Status::Error;
        result.payload = Json{{"error", e.what()}};
        code = exit_usage;
    } catch (const UsageError& e) {
        result.status = Status::Error;
        result.payload = Json{{"error", e.what()}};
        code = exit_usage;
    } catch (const DomainError& e) {
        result.status = Status::Error;
        result.payload = Json{{"error", e.what()}};
        code = exit_usage;
    } catch (const std::exception& e) {
        result.status = Status::Error;
        result.payload = Json{{"error", std::string("internal: ") + e.what()}};
        code = exit_internal;
    }
    result.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (o.json) {
        out << to_json(result).dump(2) << "\n";
    } else if (result.status == Status::Error) {
        err << "cyclowed: " << result.payload.at("error").get<std::string>() << "\n";
        if (code == exit_usage)
            err << "Run with --help for usage.\n";
    } else {
        out << result.text;
    }
    return code;
}

} // namespace cyclowed::cli
