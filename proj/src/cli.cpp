#include "liftvf/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <thread>

#include "liftvf/classify.hpp"
#include "liftvf/crosscap.hpp"
#include "liftvf/fields.hpp"
#include "liftvf/image.hpp"
#include "liftvf/json_io.hpp"
#include "liftvf/lift.hpp"
#include "liftvf/order.hpp"

namespace liftvf {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("LIFTVF_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

// Runs fn(0..n-1) on up to thread_cap() threads; each index owns its output
// slot, so results are identical to a sequential run.
template <typename Fn>
void parallel_for(std::size_t n, Fn fn) {
    const unsigned workers = std::min<std::size_t>(thread_cap(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

void check_k(int k) {
    if (k < 2) throw UsageError("--k violates the bound 2 <= k");
}

void check_j(int k, int j) {
    if (j < 1 || j > k - 1) throw UsageError("--j violates the bound 1 <= j <= k-1");
}

std::string monomial_name(const VarTable& table, const Monomial& m) {
    std::string s;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += table.name(v);
        if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s.empty() ? "1" : s;
}

void print_field_text(std::ostream& out, const CrossCapContext& ctx, const VectorField& f) {
    const VarTablePtr& table =
        f.space == Space::domain ? ctx.domain_table() : ctx.codomain_table();
    out << f.label << " (k=" << ctx.k() << ")\n";
    for (std::size_t i = 0; i < f.components.size(); ++i)
        out << "  " << table->name(i) << ": " << to_string(f.components[i]) << "\n";
}

int cmd_fields(std::ostream& out, int k, const std::string& family, int j, bool has_j,
               const std::string& format) {
    check_k(k);
    const CrossCapContext ctx(k);
    std::vector<VectorField> fields;
    if (family.empty()) {
        if (has_j) throw UsageError("--j requires --family");
        fields = generator_set(ctx);
    } else if (family == "euler") {
        if (has_j) throw UsageError("--j does not apply to the Euler field");
        fields.push_back(euler_field(ctx));
    } else if (family == "1" || family == "2" || family == "3") {
        const int f = family[0] - '0';
        if (has_j) {
            check_j(k, j);
            fields.push_back(family_field(ctx, f, j));
        } else {
            for (int jj = 1; jj <= k - 1; ++jj) fields.push_back(family_field(ctx, f, jj));
        }
    } else {
        throw UsageError("--family must be one of 1, 2, 3, euler");
    }

    if (format == "json") {
        Json doc{{"k", k}, {"fields", Json::array()}};
        for (const auto& f : fields) doc["fields"].push_back(field_json(k, f));
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& f : fields) print_field_text(out, ctx, f);
    }
    return 0;
}

int cmd_verify(std::ostream& out, int k, int max_k, const std::string& format) {
    check_k(k);
    if (max_k < k) throw UsageError("--max-k violates the bound k <= max-k");
    std::vector<std::vector<VerifyReport>> per_k(static_cast<std::size_t>(max_k - k + 1));
    parallel_for(per_k.size(), [&](std::size_t i) {
        const CrossCapContext ctx(k + static_cast<int>(i));
        per_k[i] = verify_all(ctx);
    });

    bool all_ok = true;
    Json results = Json::array();
    for (const auto& reports : per_k) {
        for (const auto& r : reports) {
            all_ok = all_ok && r.ok;
            if (format == "json") {
                results.push_back(Json{{"k", r.k},
                                       {"label", r.label},
                                       {"ok", r.ok},
                                       {"residual_terms", r.residual_terms}});
            } else {
                out << "k=" << r.k << "  " << r.label << "  "
                    << (r.ok ? "PASS" : "FAIL (residual terms: " +
                                            std::to_string(r.residual_terms) + ")")
                    << "\n";
            }
        }
    }
    if (format == "json") {
        out << Json{{"results", std::move(results)}, {"ok", all_ok}}.dump(2) << "\n";
    } else {
        std::size_t total = 0;
        for (const auto& reports : per_k) total += reports.size();
        out << (all_ok ? "PASS" : "FAIL") << ": " << total
            << " lift identities checked for k=" << k << ".." << max_k << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_image(std::ostream& out, int k, const std::string& format) {
    check_k(k);
    const CrossCapContext ctx(k);
    const ImageEquation img = image_equation(ctx);
    if (format == "json") {
        Json doc{{"k", k},
                 {"w2_degree", degree_in(img.h, ctx.W2_index())},
                 {"h", poly_json(img.h)}};
        out << doc.dump(2) << "\n";
    } else {
        out << "h_V(k=" << k << ") = " << to_string(img.h) << "\n";
    }
    return 0;
}

int cmd_tangency(std::ostream& out, int k, bool slow, const std::string& format) {
    check_k(k);
    if (k >= 5 && !slow)
        throw UsageError("tangency for k >= 5 is gated behind --slow");
    const CrossCapContext ctx(k);
    const ImageEquation img = image_equation(ctx);
    const std::vector<VectorField> gens = generator_set(ctx);
    std::vector<TangencyResult> results(gens.size(),
                                        TangencyResult{false, img.h, img.h});
    parallel_for(gens.size(), [&](std::size_t i) {
        results[i] = tangency_factor(ctx, img, gens[i]);
    });

    bool all_tangent = true;
    Json rows = Json::array();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& r = results[i];
        all_tangent = all_tangent && r.tangent;
        if (format == "json") {
            Json row{{"label", gens[i].label}, {"tangent", r.tangent}};
            if (r.tangent)
                row["factor"] = poly_json(r.factor);
            else
                row["remainder_terms"] = r.remainder.term_count();
            rows.push_back(std::move(row));
        } else {
            out << gens[i].label << "  ";
            if (r.tangent)
                out << "factor: " << to_string(r.factor) << "\n";
            else
                out << "NOT_TANGENT (remainder terms: " << r.remainder.term_count()
                    << ")\n";
        }
    }
    if (format == "json")
        out << Json{{"k", k}, {"fields", std::move(rows)}, {"ok", all_tangent}}.dump(2)
            << "\n";
    else
        out << (all_tangent ? "PASS" : "FAIL") << ": all generators tangent to the image\n";
    return all_tangent ? 0 : 1;
}

int cmd_leading_terms(std::ostream& out, int k, const std::string& format) {
    check_k(k);
    const CrossCapContext ctx(k);
    const std::vector<VectorField> gens = generator_set(ctx);

    bool all_ok = true;
    std::vector<std::pair<std::string, int>> stated_pairs;
    Json rows = Json::array();
    for (const auto& g : gens) {
        const ModuleTerm lt = leading_term(ctx, g);
        const std::string mono = monomial_name(*ctx.codomain_table(), lt.monomial);
        const auto expected = paper_leading_term(ctx, g.label);
        std::string verdict = "recorded (not in paper table)";
        if (expected) {
            const bool match =
                expected->monomial_name == mono && expected->position == lt.position;
            all_ok = all_ok && match;
            verdict = match ? "PASS" : "FAIL";
            stated_pairs.emplace_back(mono, lt.position);
        }
        if (format == "json") {
            Json row{{"label", g.label},
                     {"coeff", to_string(lt.coeff)},
                     {"monomial", mono},
                     {"position", lt.position},
                     {"in_paper_table", expected.has_value()}};
            if (expected) row["match"] = verdict == "PASS";
            rows.push_back(std::move(row));
        } else {
            out << g.label << "  LT = " << to_string(lt.coeff) << " * " << mono << " * e"
                << lt.position << "  " << verdict << "\n";
        }
    }
    std::sort(stated_pairs.begin(), stated_pairs.end());
    const bool distinct =
        std::adjacent_find(stated_pairs.begin(), stated_pairs.end()) == stated_pairs.end();
    all_ok = all_ok && distinct;
    if (format == "json") {
        out << Json{{"k", k},
                    {"fields", std::move(rows)},
                    {"stated_pairs_distinct", distinct},
                    {"ok", all_ok}}
                   .dump(2)
            << "\n";
    } else {
        out << "stated leading pairs pairwise distinct: " << (distinct ? "yes" : "NO")
            << "\n";
        out << (all_ok ? "PASS" : "FAIL") << ": leading terms against the paper table (k="
            << k << ")\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_membership(std::ostream& out, int k, int max_degree, bool slow,
                   const std::string& format) {
    check_k(k);
    if (k >= 6 && !slow)
        throw UsageError("membership for k >= 6 is gated behind --slow");
    if (max_degree < 0) throw UsageError("--max-degree violates the bound 0 <= D");
    const CrossCapContext ctx(k);
    const MembershipReport report =
        graded_membership_check(ctx, image_equation(ctx), max_degree);

    if (format == "json") {
        Json rows = Json::array();
        for (const auto& d : report.per_degree)
            rows.push_back(Json{{"delta", d.delta},
                                {"tangent_dim", d.tangent_dim},
                                {"span_dim", d.span_dim},
                                {"ok", d.ok}});
        out << Json{{"k", k}, {"degrees", std::move(rows)}, {"ok", report.ok}}.dump(2)
            << "\n";
    } else {
        for (const auto& d : report.per_degree)
            out << "delta=" << d.delta << "  tangent_dim=" << d.tangent_dim
                << "  span_dim=" << d.span_dim << "  " << (d.ok ? "ok" : "MISMATCH")
                << "\n";
        out << (report.ok ? "PASS" : "FAIL") << ": graded membership (k=" << k
            << ", delta <= " << max_degree << ")\n";
    }
    return report.ok ? 0 : 1;
}

void print_classification(std::ostream& out, const CrossCapContext& ctx,
                          const LinearFunction& h, const std::string& format, Json* doc) {
    const Poly hp = linear_poly(ctx, h);
    const auto comparisons = compare_closed_forms(ctx, h);
    const Codim1Certificate cert = codim1_certificate(ctx, h);
    const Poly euler_h =
        truncate_mod_m2(field_applied_to_linear(ctx, euler_field(ctx), h));

    if (format == "json") {
        Json forms = Json::array();
        for (const auto& c : comparisons)
            forms.push_back(Json{{"label", c.label},
                                 {"direct", poly_json(c.direct)},
                                 {"closed_form", poly_json(c.closed)},
                                 {"match", c.match}});
        (*doc)["h"] = linear_function_json(h);
        (*doc)["mod_m2_forms"] = std::move(forms);
        (*doc)["euler"] = poly_json(euler_h);
        (*doc)["rank"] = cert.rank;
        (*doc)["certified"] = cert.certified;
        return;
    }
    out << "h = " << to_string(hp) << "\n";
    out << "mod-m^2 forms (direct; closed-form comparison):\n";
    for (const auto& c : comparisons)
        out << "  " << c.label << "(h) = " << to_string(c.direct)
            << (c.match ? "  [closed form matches]"
                        : "  [closed form differs: " + to_string(c.closed) + "]")
            << "\n";
    out << "  xi_e(h) = " << to_string(euler_h) << "\n";
    out << "rank = " << cert.rank << " / " << ctx.codomain_dim() << "\n";
    out << "certified codimension 1: " << (cert.certified ? "yes" : "not certified")
        << "\n";
}

int cmd_classify(std::ostream& out, int k, const std::string& coeffs_path, int random_n,
                 std::uint64_t seed, const std::string& format) {
    check_k(k);
    const CrossCapContext ctx(k);
    if (!coeffs_path.empty() && random_n > 0)
        throw UsageError("--coeffs and --random are mutually exclusive");

    if (random_n > 0) {
        std::vector<std::pair<LinearFunction, Codim1Certificate>> sweep(
            static_cast<std::size_t>(random_n));
        parallel_for(sweep.size(), [&](std::size_t t) {
            const LinearFunction h =
                random_linear_function(ctx, trial_seed(seed, static_cast<std::uint64_t>(t)));
            const Codim1Certificate cert = codim1_certificate(ctx, h);
            sweep[t] = {std::move(h), cert};
        });
        bool all_certified = true;
        Json trials = Json::array();
        for (int t = 0; t < random_n; ++t) {
            const LinearFunction& h = sweep[t].first;
            const Codim1Certificate& cert = sweep[t].second;
            all_certified = all_certified && cert.certified;
            if (format == "json")
                trials.push_back(Json{{"trial", t},
                                      {"h", linear_function_json(h)},
                                      {"rank", cert.rank},
                                      {"certified", cert.certified}});
            else
                out << "trial " << std::setw(3) << t << "  rank=" << cert.rank << "  "
                    << (cert.certified ? "certified" : "NOT certified") << "\n";
        }
        if (format == "json")
            out << Json{{"k", k},
                        {"seed", seed},
                        {"trials", std::move(trials)},
                        {"ok", all_certified}}
                       .dump(2)
                << "\n";
        else
            out << (all_certified ? "PASS" : "FAIL") << ": " << random_n
                << " random linear functions with alpha_{k-2}, beta_{k-1} != 0 (k=" << k
                << ", seed=" << seed << ")\n";
        return all_certified ? 0 : 1;
    }

    if (coeffs_path.empty())
        throw UsageError("classify requires --coeffs FILE or --random N");
    std::ifstream in(coeffs_path);
    if (!in) throw UsageError("cannot open coefficients file '" + coeffs_path + "'");
    Json parsed;
    try {
        in >> parsed;
    } catch (const std::exception& e) {
        throw UsageError("malformed JSON in '" + coeffs_path + "': " + e.what());
    }
    const LinearFunction h = linear_function_from_json(ctx, parsed);
    if (format == "json") {
        Json doc{{"k", k}};
        print_classification(out, ctx, h, format, &doc);
        out << doc.dump(2) << "\n";
    } else {
        print_classification(out, ctx, h, format, nullptr);
    }
    return 0;
}

int cmd_suite(std::ostream& out, int max_k, bool slow, std::uint64_t seed) {
    if (max_k < 2) throw UsageError("--max-k violates the bound 2 <= max-k");
    bool ok = true;
    const auto section = [&](const std::string& name, int rc) {
        out << "[" << (rc == 0 ? "PASS" : "FAIL") << "] " << name << "\n";
        ok = ok && rc == 0;
    };

    out << "== lift verification ==\n";
    section("verify k=2.." + std::to_string(max_k), cmd_verify(out, 2, max_k, "text"));

    out << "== image tangency ==\n";
    const int tangency_max = std::min(max_k, slow ? 6 : 4);
    for (int k = 2; k <= tangency_max; ++k)
        section("tangency k=" + std::to_string(k), cmd_tangency(out, k, slow, "text"));

    if (max_k >= 3) {
        out << "== leading terms ==\n";
        for (int k = 3; k <= max_k; ++k)
            section("leading-terms k=" + std::to_string(k),
                    cmd_leading_terms(out, k, "text"));
    }

    out << "== graded membership ==\n";
    section("membership k=2, delta <= 6", cmd_membership(out, 2, 6, slow, "text"));
    if (max_k >= 3)
        section("membership k=3, delta <= 4", cmd_membership(out, 3, 4, slow, "text"));

    if (max_k >= 3) {
        out << "== classification sweep ==\n";
        for (int k = 3; k <= std::min(max_k, 5); ++k)
            section("classify k=" + std::to_string(k) + ", 100 random h",
                    cmd_classify(out, k, "", 100, seed, "text"));
    }

    out << "suite: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"liftable vector fields over minimal cross cap maps"};
    app.require_subcommand(1);

    int k = 2, max_k = -1, j = 0, random_n = 0, max_degree = -1;
    std::uint64_t seed = 12345;
    std::string family, format = "text", coeffs_path;
    bool slow = false;

    auto* fields_cmd = app.add_subcommand("fields", "emit liftable vector fields");
    fields_cmd->add_option("--k", k, "multiplicity (k >= 2)")->required();
    fields_cmd->add_option("--family", family, "1, 2, 3 or euler");
    auto* jopt = fields_cmd->add_option("--j", j, "family index (1 <= j <= k-1)");
    fields_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "check the lift identities exactly");
    verify_cmd->add_option("--k", k, "multiplicity (k >= 2)")->required();
    verify_cmd->add_option("--max-k", max_k, "verify for k..max-k");
    verify_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* image_cmd = app.add_subcommand("image", "print the image equation h_V");
    image_cmd->add_option("--k", k, "multiplicity (k >= 2)")->required();
    image_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* tangency_cmd =
        app.add_subcommand("tangency", "factor table for xi(h_V) against h_V");
    tangency_cmd->add_option("--k", k, "multiplicity (k >= 2)")->required();
    tangency_cmd->add_flag("--slow", slow, "allow k >= 5");
    tangency_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* lt_cmd =
        app.add_subcommand("leading-terms", "leading terms against the paper table");
    lt_cmd->add_option("--k", k, "multiplicity (k >= 2)")->required();
    lt_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* member_cmd =
        app.add_subcommand("membership", "graded generation evidence per degree");
    member_cmd->add_option("--k", k, "multiplicity (k >= 2)")->required();
    member_cmd->add_option("--max-degree", max_degree, "degree bound (default 2k)");
    member_cmd->add_flag("--slow", slow, "allow k >= 6");
    member_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* classify_cmd =
        app.add_subcommand("classify", "mod-m^2 forms and the Nakayama rank test");
    classify_cmd->add_option("--k", k, "multiplicity (k >= 2)")->required();
    classify_cmd->add_option("--coeffs", coeffs_path, "linear function JSON file");
    classify_cmd->add_option("--random", random_n, "number of random trials");
    classify_cmd->add_option("--seed", seed, "root seed for random trials");
    classify_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* suite_cmd = app.add_subcommand("suite", "run the composed verification suites");
    suite_cmd->add_option("--max-k", max_k, "largest multiplicity (default 6)");
    suite_cmd->add_flag("--slow", slow, "include k=5,6 tangency");
    suite_cmd->add_option("--seed", seed, "root seed for the classification sweep");

    std::vector<const char*> argv;
    argv.push_back("liftvf");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(fields_cmd))
            return cmd_fields(out, k, family, j, jopt->count() > 0, format);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(out, k, max_k < 0 ? k : max_k, format);
        if (app.got_subcommand(image_cmd)) return cmd_image(out, k, format);
        if (app.got_subcommand(tangency_cmd)) return cmd_tangency(out, k, slow, format);
        if (app.got_subcommand(lt_cmd)) return cmd_leading_terms(out, k, format);
        if (app.got_subcommand(member_cmd))
            return cmd_membership(out, k, max_degree < 0 ? 2 * k : max_degree, slow, format);
        if (app.got_subcommand(classify_cmd))
            return cmd_classify(out, k, coeffs_path, random_n, seed, format);
        if (app.got_subcommand(suite_cmd))
            return cmd_suite(out, max_k < 0 ? 6 : max_k, slow, seed);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace liftvf
