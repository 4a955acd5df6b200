// qrt: command-line front end.
// Exit codes: 0 success, 1 a requested check failed, 2 bad usage or input.

#include "CLI11.hpp"

#include "qrt/qrt.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace qrt;

namespace {

struct Options {
        bool json = false;
        int jobs = 1;
};

struct Outcome {
        int code = 0;
        Json report;
        std::string text;
};

void emit(const Options &opt, const Outcome &out)
{
        if (opt.json)
                std::cout << dump_json(out.report);
        else
                std::cout << out.text;
}

std::string pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string class_name(const std::string &key)
{
        auto idx = catalog().index_of(Tournament::decode(key));
        return idx ? "H" + std::to_string(*idx) : key;
}

Json scores_json(const Tournament &t)
{
        Json s = Json::array();
        for (int d : t.score_sequence())
                s.push_back(d);
        return s;
}

Outcome cmd_enumerate(int n)
{
        if (n < 1 || n > max_enumeration_order)
                throw InputError("--n must lie in 1.." + std::to_string(max_enumeration_order));
        Outcome out;
        Json classes = Json::array();
        for (const auto &t : enumerate(n)) {
                std::string label = n <= 5 ? catalog().label(t) : "";
                out.text += t.encode() + (label.empty() ? "" : " " + label) + "\n";
                Json c = {{"encoding", t.encode()}};
                if (!label.empty())
                        c["name"] = label;
                c["automorphisms"] = automorphism_count(t);
                c["scores"] = scores_json(t);
                classes.push_back(std::move(c));
        }
        out.report = {{"n", n}, {"count", classes.size()}, {"classes", classes}};
        return out;
}

Json appendix_report_json(const AppendixReport &rep)
{
        Json mism = Json::array();
        for (const auto &m : rep.mismatches)
                mism.push_back({{"tournament", m.name},
                                {"family", m.family},
                                {"row", m.row},
                                {"col", m.col},
                                {"got", m.got.str()},
                                {"expected", m.expected.str()}});
        return {{"matrices_compared", rep.matrices_compared}, {"mismatches", mism}, {"pass", rep.pass()}};
}

std::string appendix_report_text(const AppendixReport &rep)
{
        std::string s;
        for (const auto &m : rep.mismatches)
                s += "MISMATCH(" + m.name + ", family " + std::to_string(m.family) + ", " + std::to_string(m.row) + ", " +
                     std::to_string(m.col) + ", got " + m.got.str() + ", expected " + m.expected.str() + ")\n";
        s += "appendix: " + std::to_string(rep.matrices_compared) + " matrices compared, " + std::to_string(rep.mismatches.size()) +
             " mismatching entries: " + pass_word(rep.pass()) + "\n";
        return s;
}

Outcome cmd_catalog(bool check)
{
        Outcome out;
        const Catalog &cat = catalog();
        Json entries = Json::array();
        for (int i = 0; i < catalog_size; ++i) {
                const Tournament &t = cat[i];
                std::string scores;
                for (int d : t.score_sequence())
                        scores += (scores.empty() ? "" : ",") + std::to_string(d);
                out.text += "H" + std::to_string(i) + "  " + t.encode() + "  scores (" + scores + ")  aut " +
                            std::to_string(automorphism_count(t)) + "\n";
                entries.push_back({{"name", "H" + std::to_string(i)},
                                   {"encoding", t.encode()},
                                   {"scores", scores_json(t)},
                                   {"automorphisms", automorphism_count(t)}});
        }
        out.report = {{"unique", cat.unique}, {"entries", entries}};
        if (check) {
                AppendixReport rep = check_appendix();
                out.text += "assignment unique: " + std::string(cat.unique ? "yes" : "no") + "\n" + appendix_report_text(rep);
                out.report["appendix"] = appendix_report_json(rep);
                out.code = cat.unique && rep.pass() ? 0 : 1;
        }
        return out;
}

Outcome cmd_density(const std::string &pattern, const std::string &host, const std::string &tournamenton, bool injective)
{
        LinComb h = parse_lincomb(pattern);
        Outcome out;
        Rational value;
        Json rep = {{"pattern", format_lincomb(h)}};
        if (!host.empty() == !tournamenton.empty())
                throw InputError("give exactly one of --host or --tournamenton");
        if (!host.empty()) {
                Tournament ht;
                try {
                        ht = parse_tournament(host);
                } catch (const std::exception &e) {
                        throw InputError(e.what());
                }
                if (ht.order() > 64)
                        throw InputError("host tournaments are limited to 64 vertices");
                value = injective ? t_inj(h, ht) : qrt::t(h, ht);
                rep["host"] = ht.encode();
                rep["kind"] = injective ? "t_inj" : "t";
        } else {
                if (injective)
                        throw InputError("--injective needs a finite --host");
                StepW w = parse_step(tournamenton);
                value = t_step(h, w);
                rep["tournamenton"] = tournamenton;
                rep["kind"] = "t";
                rep["regular"] = degrees(w).is_regular;
        }
        rep["value"] = value.str();
        rep["decimal"] = value.decimal(12);
        rep["random_value"] = t_half(h).str();
        out.report = rep;
        out.text = std::string(injective ? "t_inj" : "t") + "(" + format_lincomb(h) + ") = " + value.str() + " ~ " + value.decimal(12) +
                   "\n(1/2-value: " + t_half(h).str() + ")\n";
        return out;
}

FlagFamily family_by_number(int q)
{
        if (q < 1 || q > 3)
                throw InputError("--family must be 1, 2 or 3");
        return flag_family(q);
}

Outcome cmd_flags_coefficients(int family, const std::string &f1, const std::string &f2, int m)
{
        Outcome out;
        std::vector<std::pair<Flag, Flag>> pairs;
        if (!f1.empty() || !f2.empty()) {
                if (f1.empty() || f2.empty())
                        throw InputError("give both --flag1 and --flag2");
                try {
                        Flag a = Flag::decode(f1), b = Flag::decode(f2);
                        if (!compatible(a, b))
                                throw InputError("flags are not compatible");
                        pairs.emplace_back(a, b);
                } catch (const InputError &) {
                        throw;
                } catch (const std::exception &e) {
                        throw InputError(e.what());
                }
        } else {
                FlagFamily fam = family_by_number(family);
                for (std::size_t i = 0; i < fam.size(); ++i)
                        for (std::size_t j = i; j < fam.size(); ++j)
                                pairs.emplace_back(fam.members[i], fam.members[j]);
        }
        Json list = Json::array();
        for (const auto &[a, b] : pairs) {
                DensityVector v;
                try {
                        v = product_coefficients(a, b, m);
                } catch (const std::out_of_range &e) {
                        throw InputError(e.what());
                }
                Json vals = Json::object();
                out.text += a.encode() + " * " + b.encode() + ":";
                for (const auto &[key, x] : v.values) {
                        if (x.is_zero())
                                continue;
                        std::string name = m <= 5 ? catalog().label(Tournament::decode(key)) : key;
                        vals[name.empty() ? key : name] = x.str();
                        out.text += " " + (name.empty() ? key : name) + "=" + x.str();
                }
                out.text += "\n";
                list.push_back({{"flag1", a.encode()}, {"flag2", b.encode()}, {"m", m}, {"coefficients", vals}});
        }
        out.report = {{"products", list}};
        return out;
}

Outcome cmd_flags_appendix()
{
        Outcome out;
        ReferenceTables computed;
        for (int i = 8; i < catalog_size; ++i)
                computed.tables["H" + std::to_string(i)] = computed_tables(catalog()[i]);
        out.report = appendix_json(computed);
        static const char *const names[] = {"B_2^1", "B_3^2", "B_3^3"};
        for (int i = 8; i < catalog_size; ++i) {
                const auto &t = computed.tables["H" + std::to_string(i)];
                for (int q = 0; q < 3; ++q) {
                        out.text += std::string(names[q]) + "(H" + std::to_string(i) + ") = 1/120 *\n";
                        for (const auto &row : t[static_cast<std::size_t>(q)]) {
                                out.text += " ";
                                for (const auto &x : row)
                                        out.text += " " + (x * Rational(120)).str();
                                out.text += "\n";
                        }
                }
        }
        return out;
}

Json verification_json(const Certificate &cert, const VerificationReport &rep)
{
        Json fams = Json::array();
        for (std::size_t q = 0; q < rep.families.size(); ++q) {
                const auto &f = rep.families[q];
                Json fj = {{"root", cert.families[q].family.root.encode()}, {"size", cert.families[q].family.size()}, {"psd", f.psd.psd}};
                if (!f.psd.psd) {
                        Json wv = Json::array();
                        for (const auto &x : f.psd.witness)
                                wv.push_back(x.str());
                        fj["witness"] = wv;
                }
                fj["kernel_dimension"] = f.kernel.size();
                fj["kernel"] = matrix_json(f.kernel);
                if (f.kernel_claimed)
                        fj["kernel_matches_claim"] = f.kernel_ok;
                fams.push_back(std::move(fj));
        }
        Json vals = Json::object();
        for (const auto &[key, v] : rep.values.values)
                vals[class_name(key)] = v.str();
        Json j = {{"name", cert.name},
                  {"target", format_lincomb(cert.target)},
                  {"constant", cert.constant.str()},
                  {"policy", cert.tight ? "equal on every class" : "minimum at least constant"},
                  {"families", fams},
                  {"values", vals},
                  {"minimum", rep.minimum.str()},
                  {"pass", rep.pass}};
        if (!cert.statement.empty())
                j["statement"] = cert.statement;
        if (!rep.failure.empty())
                j["failure"] = rep.failure;
        return j;
}

std::string verification_text(const Certificate &cert, const VerificationReport &rep)
{
        std::string s = cert.name + ": " + format_lincomb(cert.target) + " >= " + cert.constant.str();
        if (!cert.statement.empty())
                s += "   [" + cert.statement + "]";
        s += "\n";
        for (std::size_t q = 0; q < rep.families.size(); ++q) {
                const auto &f = rep.families[q];
                s += "  family " + std::to_string(q + 1) + " (root " + cert.families[q].family.root.encode() + ", " +
                     std::to_string(cert.families[q].family.size()) + " flags): psd " + (f.psd.psd ? "yes" : "no") + ", kernel dim " +
                     std::to_string(f.kernel.size());
                if (f.kernel_claimed)
                        s += std::string(", claimed kernel ") + (f.kernel_ok ? "matches" : "DIFFERS");
                s += "\n";
        }
        s += "  c(J):";
        for (const auto &[key, v] : rep.values.values)
                s += " " + class_name(key) + "=" + v.str();
        s += "\n  minimum " + rep.minimum.str() + "\n";
        if (!rep.failure.empty())
                s += "  failure: " + rep.failure + "\n";
        s += "  " + pass_word(rep.pass) + "\n";
        return s;
}

Outcome cmd_verify(const std::string &theorem, const std::string &file, bool appendix, const std::string &tables)
{
        Outcome out;
        int given = !theorem.empty() + !file.empty() + appendix;
        if (given != 1)
                throw InputError("give exactly one of --theorem, --file or --appendix");
        if (appendix) {
                AppendixReport rep = tables.empty() ? check_appendix() : check_appendix(appendix_from_json(read_json_file(tables)));
                out.report = appendix_report_json(rep);
                out.text = appendix_report_text(rep);
                out.code = rep.pass() ? 0 : 1;
                return out;
        }
        std::vector<Certificate> certs;
        if (!file.empty()) {
                try {
                        certs.push_back(certificate_from_json(read_json_file(file)));
                } catch (const AsymmetricMatrix &e) {
                        out.code = 1;
                        out.report = {{"file", file}, {"pass", false}, {"failure", std::string("matrix not symmetric: ") + e.what()}};
                        out.text = file + ": matrix not symmetric: " + e.what() + "\n  FAIL\n";
                        return out;
                }
        } else if (theorem == "all") {
                for (const auto &n : builtin_names())
                        certs.push_back(builtin_certificate(n));
        } else {
                try {
                        certs.push_back(builtin_certificate(theorem));
                } catch (const std::invalid_argument &e) {
                        throw InputError(e.what());
                }
        }
        Json list = Json::array();
        bool all = true;
        for (const auto &c : certs) {
                VerificationReport rep = verify(c);
                all = all && rep.pass;
                list.push_back(verification_json(c, rep));
                out.text += verification_text(c, rep);
        }
        out.report = {{"certificates", list}, {"pass", all}};
        out.code = all ? 0 : 1;
        return out;
}

Outcome cmd_negative(bool all, bool search, bool uz, bool h9, int jobs)
{
        if (!(all || search || uz || h9))
                throw InputError("choose --all, --search, --uz or --h9");
        Outcome out;
        bool ok = true;
        if (all || h9) {
                Rational v = h9_check();
                bool pass = v == threshold_1024();
                ok = ok && pass;
                out.report["h9"] = {{"value", v.str()}, {"expected", "1/1024"}, {"pass", pass}};
                out.text += "t(H9, W_C3) = " + v.str() + "  " + pass_word(pass) + "\n";
        }
        if (all || uz) {
                UzReport rep = uz_report();
                ok = ok && rep.pass();
                Json polys = Json::array(), evals = Json::array();
                for (const auto &p : rep.polynomials) {
                        polys.push_back({{"tournament", "H" + std::to_string(p.h)},
                                         {"computed", p.computed.str("z")},
                                         {"expected", p.expected.str("z")},
                                         {"pass", p.ok()}});
                        out.text += "t(H" + std::to_string(p.h) + ", U_z) = " + p.computed.str("z") + "  " + pass_word(p.ok()) + "\n";
                }
                for (const auto &e : rep.evaluations) {
                        const char *side = e.computed > threshold_1024() ? ">" : (e.computed < threshold_1024() ? "<" : "=");
                        evals.push_back({{"tournament", "H" + std::to_string(e.h)},
                                         {"z", e.z.str()},
                                         {"computed", e.computed.str()},
                                         {"expected", e.expected.str()},
                                         {"versus_1/1024", side},
                                         {"pass", e.ok()}});
                        out.text += "t(H" + std::to_string(e.h) + ", U_" + e.z.str() + ") = " + e.computed.str() + " " + side + " 1/1024  " +
                                    pass_word(e.ok()) + "\n";
                }
                out.report["uz"] = {{"polynomials", polys}, {"evaluations", evals}, {"pass", rep.pass()}};
        }
        if (all || search) {
                auto results = regular7_search(jobs);
                const std::string example = canonical_form(example_seven());
                bool found = false, near = false;
                Json list = Json::array();
                out.text += "regular 7-vertex classes: " + std::to_string(results.size()) + "\n";
                for (const auto &r : results) {
                        bool is_example = r.tournament.encode() == example;
                        if (is_example) {
                                found = true;
                                near = std::abs(r.density.to_double() - example_seven_density) <= 5e-9 && r.exceeds_threshold;
                        }
                        list.push_back({{"tournament", r.tournament.encode()},
                                        {"density", r.density.str()},
                                        {"decimal", r.density.decimal(12)},
                                        {"exceeds_1/1024", r.exceeds_threshold},
                                        {"example", is_example}});
                        out.text += "  " + r.tournament.encode() + "  t(H18, W_T) = " + r.density.str() + " ~ " + r.density.decimal(12) +
                                    (r.exceeds_threshold ? "  > 1/1024" : "  < 1/1024") + (is_example ? "  (example)" : "") + "\n";
                }
                bool pass = found && near;
                ok = ok && pass;
                out.report["search"] = {{"classes", list}, {"example_found", found}, {"pass", pass}};
                out.text += "search: " + pass_word(pass) + "\n";
        }
        out.report["pass"] = ok;
        out.code = ok ? 0 : 1;
        return out;
}

Outcome cmd_sample(const std::string &source, int n, std::uint64_t seed, const std::string &pattern, const std::string &defect,
                   long trials)
{
        if (n < 1 || n > 20000)
                throw InputError("--n must lie in 1..20000");
        StepW w = parse_step(source);
        Tournament t = sample({w, n, seed});
        Outcome out;
        out.report = {{"source", source}, {"n", n}, {"seed", seed}};
        out.text = "sample of " + source + " on " + std::to_string(n) + " vertices, seed " + std::to_string(seed) + "\n";
        if (n <= 16)
                out.report["tournament"] = t.encode();
        if (!pattern.empty()) {
                Tournament h;
                try {
                        h = parse_tournament(pattern);
                } catch (const std::exception &e) {
                        throw InputError(e.what());
                }
                double est = empirical_density(h, t, trials, seed);
                Rational exact = t_step(h, w);
                out.report["pattern"] = h.encode();
                out.report["trials"] = trials;
                out.report["estimate"] = est;
                out.report["limit_value"] = exact.str();
                out.text += "estimated t(" + pattern + ") = " + std::to_string(est) + " (" + std::to_string(trials) +
                            " random maps); limit value " + exact.str() + " ~ " + exact.decimal(9) + "\n";
        }
        if (!defect.empty()) {
                Rational eps;
                try {
                        eps = Rational::parse(defect);
                } catch (const std::exception &e) {
                        throw InputError(std::string("--defect: ") + e.what());
                }
                if (eps.sign() <= 0 || eps >= Rational(1, 2))
                        throw InputError("--defect must lie in (0,1/2)");
                Rational d = near_regularity_defect(t, eps);
                out.report["eps"] = eps.str();
                out.report["defect"] = d.str();
                out.text += "near-regularity defect at eps " + eps.str() + ": " + d.str() + " ~ " + d.decimal(6) + "\n";
        }
        if (n <= 16 && pattern.empty() && defect.empty())
                out.text += t.encode() + "\n";
        return out;
}

} // namespace

int main(int argc, char **argv)
{
        CLI::App app{"Exact verification of quasirandom-forcing computations for tournaments"};
        app.require_subcommand(1);
        app.fallthrough();
        Options opt;
        app.add_flag("--json", opt.json, "Machine-readable output");
        app.add_option("--jobs", opt.jobs, "Worker threads where supported")->check(CLI::Range(1, 256));

        int n = 0;
        auto *en = app.add_subcommand("enumerate", "List tournaments on n vertices up to isomorphism");
        en->add_option("--n", n, "Vertex count (1..7)")->required();

        bool check = false;
        auto *cat = app.add_subcommand("catalog", "Show the names H0..H19");
        cat->add_flag("--check", check, "Check uniqueness and the reference tables");

        std::string pattern, host, tournamenton;
        bool injective = false;
        auto *den = app.add_subcommand("density", "Homomorphism density of a pattern");
        den->add_option("--pattern", pattern, "Tournament or combination, e.g. 8*C3 + 256*H10")->required();
        den->add_option("--host", host, "Finite host tournament");
        den->add_option("--tournamenton", tournamenton, "half, wt:<T>, uz@<p/q> or blend(W1,W0,p/q)");
        den->add_flag("--injective", injective, "Injective density (finite host only)");

        auto *fl = app.add_subcommand("flags", "Flag-product coefficients");
        fl->require_subcommand(1);
        int family = 1, m = 5;
        std::string flag1, flag2;
        auto *fc = fl->add_subcommand("coefficients", "Coefficients b(F1,F2;J)");
        fc->add_option("--family", family, "Flag family 1, 2 or 3");
        fc->add_option("--flag1", flag1, "First flag f<r>:<bits>");
        fc->add_option("--flag2", flag2, "Second flag f<r>:<bits>");
        fc->add_option("--m", m, "Expansion size");
        auto *fa = fl->add_subcommand("appendix", "Recompute the 36 coefficient matrices");

        std::string theorem, file, tables;
        bool appendix = false;
        auto *ver = app.add_subcommand("verify", "Verify certificates or the reference tables");
        ver->add_option("--theorem", theorem, "h10, h11, h13, h14 or all");
        ver->add_option("--file", file, "Certificate JSON file");
        ver->add_flag("--appendix", appendix, "Compare recomputed tables with the reference ones");
        ver->add_option("--tables", tables, "Reference tables JSON (default: built in)");

        bool all = false, search = false, uz = false, h9 = false;
        auto *neg = app.add_subcommand("negative", "Constructions that defeat forcing");
        neg->add_flag("--all", all, "Run every check");
        neg->add_flag("--search", search, "Regular 7-vertex search");
        neg->add_flag("--uz", uz, "U_z polynomials and evaluations");
        neg->add_flag("--h9", h9, "t(H9, W_C3)");

        std::string source, defect;
        std::uint64_t seed = 0;
        long trials = 1000000;
        int sn = 0;
        auto *sam = app.add_subcommand("sample", "W-random tournaments");
        sam->add_option("--source", source, "half, wt:<T>, uz@<p/q> or blend(W1,W0,p/q)")->required();
        sam->add_option("--n", sn, "Vertex count")->required();
        sam->add_option("--seed", seed, "64-bit seed")->required();
        sam->add_option("--pattern", pattern, "Estimate the density of this tournament");
        sam->add_option("--trials", trials, "Random maps for the estimate")->check(CLI::PositiveNumber);
        sam->add_option("--defect", defect, "Near-regularity defect at this eps");

        try {
                app.parse(argc, argv);
        } catch (const CLI::ParseError &e) {
                int code = app.exit(e);
                return code == 0 ? 0 : 2;
        }

        try {
                Outcome out;
                if (*en)
                        out = cmd_enumerate(n);
                else if (*cat)
                        out = cmd_catalog(check);
                else if (*den)
                        out = cmd_density(pattern, host, tournamenton, injective);
                else if (*fc)
                        out = cmd_flags_coefficients(family, flag1, flag2, m);
                else if (*fa)
                        out = cmd_flags_appendix();
                else if (*ver)
                        out = cmd_verify(theorem, file, appendix, tables);
                else if (*neg)
                        out = cmd_negative(all, search, uz, h9, opt.jobs);
                else if (*sam)
                        out = cmd_sample(source, sn, seed, pattern, defect, trials);
                emit(opt, out);
                return out.code;
        } catch (const InputError &e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
        } catch (const CatalogError &e) {
                std::cerr << "catalog: " << e.what() << "\n";
                return 1;
        } catch (const std::invalid_argument &e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
        } catch (const std::out_of_range &e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
        }
}
