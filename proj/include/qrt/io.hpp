#pragma once

// Text and JSON formats: linear combinations, step tournamentons, certificates and
// reference coefficient tables.

#include "json.hpp"

#include "qrt/catalog.hpp"
#include "qrt/certify.hpp"
#include "qrt/density.hpp"
#include "qrt/flags.hpp"
#include "qrt/rational.hpp"
#include "qrt/symmatrix.hpp"
#include "qrt/tournamenton.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrt {

using Json = nlohmann::ordered_json;

/// Malformed input; `what()` names the location.
class InputError : public std::runtime_error {
public:
        using std::runtime_error::runtime_error;
};

/// A certificate matrix that is not symmetric. Parsing succeeds up to this point, but such
/// a matrix can never certify anything.
class AsymmetricMatrix : public std::runtime_error {
public:
        using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string strip(const std::string &s)
{
        std::string out;
        for (char c : s)
                if (!std::isspace(static_cast<unsigned char>(c)))
                        out += c;
        return out;
}

} // namespace detail

/// `8*C3 + 256*H10`, `-8*C3 - 1/4*H10`, `TT3`.
inline LinComb parse_lincomb(const std::string &text)
{
        const std::string s = detail::strip(text);
        if (s.empty())
                throw InputError("empty linear combination");
        std::vector<LinComb::Term> terms;
        std::size_t pos = 0;
        while (pos < s.size()) {
                int sign = 1;
                if (s[pos] == '+' || s[pos] == '-') {
                        sign = s[pos] == '-' ? -1 : 1;
                        ++pos;
                } else if (pos != 0) {
                        throw InputError("expected '+' or '-' at offset " + std::to_string(pos) + " in '" + text + "'");
                }
                std::size_t end = s.find_first_of("+-", pos);
                std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
                if (term.empty())
                        throw InputError("empty term in '" + text + "'");
                Rational coeff(1);
                std::string name = term;
                if (auto star = term.find('*'); star != std::string::npos) {
                        try {
                                coeff = Rational::parse(term.substr(0, star));
                        } catch (const std::exception &e) {
                                throw InputError("bad coefficient in term '" + term + "': " + e.what());
                        }
                        name = term.substr(star + 1);
                }
                try {
                        terms.emplace_back(Rational(sign) * coeff, parse_tournament(name));
                } catch (const std::exception &e) {
                        throw InputError(e.what());
                }
                pos = end == std::string::npos ? s.size() : end;
        }
        return LinComb(terms);
}

inline std::string format_lincomb(const LinComb &c)
{
        std::string out;
        for (const auto &[coeff, t] : c.terms()) {
                const std::string label = catalog().label(t);
                const std::string name = label.empty() ? t.encode() : label.substr(0, label.find('/'));
                if (out.empty())
                        out += (coeff.sign() < 0 ? "-" : "");
                else
                        out += coeff.sign() < 0 ? " - " : " + ";
                out += (abs(coeff) == Rational(1) ? "" : abs(coeff).str() + "*") + name;
        }
        return out.empty() ? "0" : out;
}

namespace detail {

inline StepW parse_step_at(const std::string &s, std::size_t &pos);

inline std::string read_atom(const std::string &s, std::size_t &pos)
{
        std::size_t start = pos;
        while (pos < s.size() && s[pos] != ',' && s[pos] != ')')
                ++pos;
        return s.substr(start, pos - start);
}

inline StepW parse_step_at(const std::string &s, std::size_t &pos)
{
        if (s.compare(pos, 6, "blend(") == 0) {
                pos += 6;
                StepW w1 = parse_step_at(s, pos);
                if (pos >= s.size() || s[pos] != ',')
                        throw InputError("expected ',' after the first blend argument");
                ++pos;
                StepW w0 = parse_step_at(s, pos);
                if (pos >= s.size() || s[pos] != ',')
                        throw InputError("expected ',' after the second blend argument");
                ++pos;
                std::string z = read_atom(s, pos);
                if (pos >= s.size() || s[pos] != ')')
                        throw InputError("expected ')' to close blend");
                ++pos;
                try {
                        return blend(w0, w1, Rational::parse(z));
                } catch (const std::exception &e) {
                        throw InputError(std::string("blend: ") + e.what());
                }
        }
        std::string atom = read_atom(s, pos);
        try {
                if (atom == "half")
                        return constant_half();
                if (atom.rfind("wt:", 0) == 0)
                        return from_tournament(parse_tournament(atom.substr(3)));
                if (atom.rfind("uz@", 0) == 0) {
                        Rational z = Rational::parse(atom.substr(3));
                        if (z.sign() < 0 || z > Rational(1, 2))
                                throw std::out_of_range("U_z needs 0 <= z <= 1/2");
                        return u_blend_at(z);
                }
        } catch (const std::exception &e) {
                throw InputError("tournamenton '" + atom + "': " + e.what());
        }
        throw InputError("unknown tournamenton '" + atom + "' (expected half, wt:<T>, uz@<p/q> or blend(W1,W0,p/q))");
}

} // namespace detail

/// `half`, `wt:<T>`, `uz@<p/q>`, `blend(<W1>,<W0>,<p/q>)`.
inline StepW parse_step(const std::string &text)
{
        const std::string s = detail::strip(text);
        std::size_t pos = 0;
        StepW w = detail::parse_step_at(s, pos);
        if (pos != s.size())
                throw InputError("trailing text in tournamenton '" + text + "'");
        return w;
}

inline Json rational_json(const Rational &r) { return r.str(); }

inline Json matrix_json(const std::vector<RationalVector> &rows)
{
        Json out = Json::array();
        for (const auto &row : rows) {
                Json r = Json::array();
                for (const auto &x : row)
                        r.push_back(x.str());
                out.push_back(std::move(r));
        }
        return out;
}

inline Json matrix_json(const SymMatrix &m)
{
        std::vector<RationalVector> rows;
        for (std::size_t i = 0; i < m.order(); ++i)
                rows.push_back(m.row(i));
        return matrix_json(rows);
}

inline Json certificate_json(const Certificate &c)
{
        Json j;
        j["name"] = c.name;
        Json target = Json::array();
        for (const auto &[coeff, t] : c.target.terms())
                target.push_back({{"coeff", coeff.str()}, {"tournament", t.encode()}});
        j["target"] = target;
        j["constant"] = c.constant.str();
        j["m"] = c.m;
        j["sense"] = "min>=";
        Json fams = Json::array();
        for (const auto &f : c.families) {
                Json fj;
                fj["root"] = f.family.root.encode();
                fj["k"] = f.family.k;
                Json flags = Json::array();
                for (const auto &flag : f.family.members)
                        flags.push_back(flag.encode());
                fj["flags"] = flags;
                fj["matrix"] = matrix_json(f.matrix);
                if (f.kernel)
                        fj["kernel"] = matrix_json(*f.kernel);
                fams.push_back(std::move(fj));
        }
        j["families"] = fams;
        return j;
}

namespace detail {

inline const Json &field(const Json &j, const char *key, const std::string &where)
{
        if (!j.is_object() || !j.contains(key))
                throw InputError(where + ": missing field \"" + key + "\"");
        return j.at(key);
}

inline Rational rational_at(const Json &j, const std::string &where)
{
        try {
                if (j.is_string())
                        return Rational::parse(j.get<std::string>());
                if (j.is_number_integer())
                        return Rational(j.get<long long>());
        } catch (const std::exception &e) {
                throw InputError(where + ": " + e.what());
        }
        throw InputError(where + ": expected a rational string \"p/q\"");
}

inline std::vector<RationalVector> rational_rows(const Json &j, const std::string &where)
{
        if (!j.is_array())
                throw InputError(where + ": expected an array of rows");
        std::vector<RationalVector> rows;
        for (std::size_t i = 0; i < j.size(); ++i) {
                const std::string w = where + "[" + std::to_string(i) + "]";
                if (!j[i].is_array())
                        throw InputError(w + ": expected an array");
                RationalVector row;
                for (std::size_t k = 0; k < j[i].size(); ++k)
                        row.push_back(rational_at(j[i][k], w + "[" + std::to_string(k) + "]"));
                rows.push_back(std::move(row));
        }
        return rows;
}

inline int int_at(const Json &j, const std::string &where)
{
        if (!j.is_number_integer())
                throw InputError(where + ": expected an integer");
        return j.get<int>();
}

inline std::string string_at(const Json &j, const std::string &where)
{
        if (!j.is_string())
                throw InputError(where + ": expected a string");
        return j.get<std::string>();
}

} // namespace detail

/// Reads a certificate; user certificates are checked with the min >= constant policy.
inline Certificate certificate_from_json(const Json &j)
{
        using namespace detail;
        Certificate c;
        c.name = string_at(field(j, "name", "certificate"), "name");
        const std::string sense = string_at(field(j, "sense", "certificate"), "sense");
        if (sense != "min>=")
                throw InputError("sense: only \"min>=\" is supported");
        c.m = int_at(field(j, "m", "certificate"), "m");
        c.constant = rational_at(field(j, "constant", "certificate"), "constant");
        const Json &target = field(j, "target", "certificate");
        if (!target.is_array() || target.empty())
                throw InputError("target: expected a non-empty array");
        std::vector<LinComb::Term> terms;
        for (std::size_t i = 0; i < target.size(); ++i) {
                const std::string w = "target[" + std::to_string(i) + "]";
                Rational coeff = rational_at(field(target[i], "coeff", w), w + ".coeff");
                const std::string name = string_at(field(target[i], "tournament", w), w + ".tournament");
                try {
                        terms.emplace_back(coeff, parse_tournament(name));
                } catch (const std::exception &e) {
                        throw InputError(w + ".tournament: " + e.what());
                }
        }
        c.target = LinComb(terms);
        const Json &fams = field(j, "families", "certificate");
        if (!fams.is_array())
                throw InputError("families: expected an array");
        for (std::size_t q = 0; q < fams.size(); ++q) {
                const std::string w = "families[" + std::to_string(q) + "]";
                const Json &fj = fams[q];
                CertificateFamily f;
                try {
                        f.family.root = Tournament::decode(string_at(field(fj, "root", w), w + ".root"));
                } catch (const InputError &) {
                        throw;
                } catch (const std::exception &e) {
                        throw InputError(w + ".root: " + e.what());
                }
                f.family.k = int_at(field(fj, "k", w), w + ".k");
                const Json &flags = field(fj, "flags", w);
                if (!flags.is_array())
                        throw InputError(w + ".flags: expected an array");
                for (std::size_t i = 0; i < flags.size(); ++i) {
                        const std::string fw = w + ".flags[" + std::to_string(i) + "]";
                        try {
                                f.family.members.push_back(Flag::decode(string_at(flags[i], fw)));
                        } catch (const InputError &) {
                                throw;
                        } catch (const std::exception &e) {
                                throw InputError(fw + ": " + e.what());
                        }
                }
                auto rows = rational_rows(field(fj, "matrix", w), w + ".matrix");
                for (std::size_t i = 0; i < rows.size(); ++i)
                        if (rows[i].size() != rows.size())
                                throw InputError(w + ".matrix[" + std::to_string(i) + "]: matrix is not square");
                for (std::size_t a = 0; a < rows.size(); ++a)
                        for (std::size_t b = a + 1; b < rows.size(); ++b)
                                if (rows[a][b] != rows[b][a])
                                        throw AsymmetricMatrix(w + ".matrix: entries (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                                               ") and (" + std::to_string(b + 1) + "," + std::to_string(a + 1) + ") differ");
                f.matrix = SymMatrix::from_rows(rows);
                if (fj.contains("kernel"))
                        f.kernel = rational_rows(fj.at("kernel"), w + ".kernel");
                c.families.push_back(std::move(f));
        }
        try {
                validate(c);
        } catch (const std::invalid_argument &e) {
                throw InputError(e.what());
        }
        return c;
}

inline Json read_json_file(const std::string &path)
{
        std::ifstream in(path);
        if (!in)
                throw InputError("cannot open '" + path + "'");
        try {
                return Json::parse(in);
        } catch (const Json::parse_error &e) {
                throw InputError(path + ": " + e.what());
        }
}

inline std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

inline Json appendix_json(const ReferenceTables &p)
{
        Json tables = Json::object();
        std::vector<std::string> names;
        for (const auto &[name, t] : p.tables)
                names.push_back(name);
        std::sort(names.begin(), names.end(), [](const std::string &a, const std::string &b) {
                return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
        });
        for (const auto &name : names) {
                const auto &t = p.tables.at(name);
                tables[name] = {{"b2_1", matrix_json(t[0])}, {"b3_2", matrix_json(t[1])}, {"b3_3", matrix_json(t[2])}};
        }
        return {{"m", 5}, {"tables", tables}};
}

inline ReferenceTables appendix_from_json(const Json &j)
{
        using namespace detail;
        if (int_at(field(j, "m", "appendix"), "m") != 5)
                throw InputError("m: reference tables are expansions at m = 5");
        const Json &tables = field(j, "tables", "appendix");
        if (!tables.is_object())
                throw InputError("tables: expected an object keyed by H8..H19");
        ReferenceTables p;
        static const char *const keys[] = {"b2_1", "b3_2", "b3_3"};
        static const std::size_t sizes[] = {4, 8, 8};
        for (const auto &[name, tj] : tables.items()) {
                TableTriple triple;
                for (int q = 0; q < 3; ++q) {
                        const std::string w = "tables." + name + "." + keys[q];
                        auto rows = rational_rows(field(tj, keys[q], "tables." + name), w);
                        if (rows.size() != sizes[q])
                                throw InputError(w + ": expected " + std::to_string(sizes[q]) + " rows");
                        for (std::size_t i = 0; i < rows.size(); ++i)
                                if (rows[i].size() != sizes[q])
                                        throw InputError(w + "[" + std::to_string(i) + "]: expected " + std::to_string(sizes[q]) + " entries");
                        triple[static_cast<std::size_t>(q)] = std::move(rows);
                }
                p.tables[name] = std::move(triple);
        }
        return p;
}

} // namespace qrt
