#ifndef TRUNCSYM_IO_HPP
#define TRUNCSYM_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "truncsym/field.hpp"
#include "truncsym/ideal.hpp"
#include "truncsym/msym.hpp"
#include "truncsym/partition.hpp"

namespace truncsym {

using json = nlohmann::ordered_json;

/* Canonical text form, e.g. "m[3,2] + 2*m[3,1^2] + 2*m[2^2,1]"; the zero
 * polynomial renders "0". */
template <class F>
std::string render_poly(const MSymPoly<F>& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& [lambda, c] : f.terms()) {
        const bool neg = c.is_negative();
        const auto abs_c = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (!abs_c.is_one())
            out += abs_c.str() + "*";
        out += "m[" + render_partition(lambda) + "]";
    }
    return out;
}

/* Grammar: terms "c*m[parts]" or "m[parts]" joined by '+'/'-';
 * whitespace-insensitive; parts use the partition syntax. */
template <class F>
MSymPoly<F> parse_poly(const std::string& text, std::size_t n, F field)
{
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r')
            s += c;
    }
    MSymPoly<F> out(n, field);
    if (s.empty() || s == "0")
        return out;

    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        }
        else if (!first) {
            throw std::invalid_argument("parse_poly: expected '+' or '-' before '" +
                                        s.substr(pos) + "'");
        }
        first = false;

        typename F::Elem coeff = field.one();
        if (s.compare(pos, 2, "m[") != 0) {
            const std::size_t star = s.find('*', pos);
            if (star == std::string::npos)
                throw std::invalid_argument("parse_poly: bad term '" + s.substr(pos) + "'");
            coeff = field.parse(s.substr(pos, star - pos));
            pos = star + 1;
        }
        if (s.compare(pos, 2, "m[") != 0)
            throw std::invalid_argument("parse_poly: expected m[...] at '" + s.substr(pos) + "'");
        const std::size_t close = s.find(']', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("parse_poly: missing ']' in '" + s.substr(pos) + "'");
        const Partition lambda = parse_partition(s.substr(pos + 2, close - pos - 2));
        pos = close + 1;

        if (negative)
            coeff = -coeff;
        out.add_term(lambda, coeff);
    }
    return out;
}

inline json partition_to_json(const Partition& lambda)
{
    json arr = json::array();
    for (unsigned v : lambda.parts())
        arr.push_back(v);
    return arr;
}

inline Partition partition_from_json(const json& j)
{
    std::vector<unsigned> parts;
    for (const auto& v : j)
        parts.push_back(v.get<unsigned>());
    return Partition(std::move(parts));
}

template <class F>
json msym_to_json(const MSymPoly<F>& f)
{
    json j;
    j["n"] = f.vars();
    j["p"] = f.field().characteristic();
    json terms = json::array();
    for (const auto& [lambda, c] : f.terms())
        terms.push_back(json{{"partition", partition_to_json(lambda)}, {"coeff", c.str()}});
    j["terms"] = terms;
    return j;
}

template <class F>
MSymPoly<F> msym_from_json(const json& j, F field)
{
    const std::size_t n = j.at("n").get<std::size_t>();
    if (j.at("p").get<unsigned long long>() != field.characteristic())
        throw std::invalid_argument("msym_from_json: characteristic mismatch");
    MSymPoly<F> out(n, field);
    for (const auto& term : j.at("terms"))
        out.add_term(partition_from_json(term.at("partition")),
                     field.parse(term.at("coeff").get<std::string>()));
    return out;
}

inline json generator_spec_to_json(const GeneratorSpec& gs)
{
    json j;
    j["p"] = gs.p;
    j["n"] = gs.n;
    j["d"] = gs.d;
    j["t"] = gs.t;
    json entries = json::array();
    for (const auto& e : gs.entries) {
        entries.push_back(json{{"i", e.level},
                               {"h", e.h},
                               {"partition", partition_to_json(e.partition)},
                               {"degree", e.degree},
                               {"retained", e.retained}});
    }
    j["entries"] = entries;
    return j;
}

inline GeneratorSpec generator_spec_from_json(const json& j)
{
    GeneratorSpec gs;
    gs.p = j.at("p").get<unsigned long long>();
    gs.n = j.at("n").get<std::size_t>();
    gs.d = j.at("d").get<unsigned>();
    gs.t = j.at("t").get<unsigned>();
    for (const auto& je : j.at("entries")) {
        GeneratorEntry e;
        e.level = je.at("i").get<unsigned>();
        e.h = je.at("h").get<unsigned>();
        e.partition = partition_from_json(je.at("partition"));
        e.degree = je.at("degree").get<unsigned long long>();
        e.retained = je.at("retained").get<bool>();
        gs.entries.push_back(std::move(e));
    }
    return gs;
}

inline std::string generator_spec_to_text(const GeneratorSpec& gs)
{
    std::string out = "p=" + std::to_string(gs.p) + " n=" + std::to_string(gs.n) +
                      " d=" + std::to_string(gs.d) + " t=" + std::to_string(gs.t) + "\n";
    for (const auto& e : gs.entries) {
        out += "m[" + render_partition(e.partition) + "] i=" + std::to_string(e.level) +
               " h=" + std::to_string(e.h) + " degree=" + std::to_string(e.degree) +
               (e.retained ? " retained" : " dropped") + "\n";
    }
    return out;
}

inline json report_to_json(const VerificationReport& rep)
{
    json j;
    j["p"] = rep.p;
    j["n"] = rep.n;
    j["d"] = rep.d;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json jc;
        jc["kind"] = c.kind;
        jc["subject"] = c.subject;
        jc["degree"] = c.degree;
        jc["outcome"] = c.passed ? "pass" : "fail";
        jc["rank_expected"] = c.rank_expected ? json(*c.rank_expected) : json(nullptr);
        jc["rank_found"] = c.rank_found ? json(*c.rank_found) : json(nullptr);
        if (!c.passed && !c.certificate.empty())
            jc["certificate"] = c.certificate;
        checks.push_back(std::move(jc));
    }
    j["checks"] = checks;
    j["overall"] = rep.overall() ? "pass" : "fail";
    return j;
}

inline VerificationReport report_from_json(const json& j)
{
    VerificationReport rep;
    rep.p = j.at("p").get<unsigned long long>();
    rep.n = j.at("n").get<std::size_t>();
    rep.d = j.at("d").get<unsigned>();
    for (const auto& jc : j.at("checks")) {
        CheckResult c;
        c.kind = jc.at("kind").get<std::string>();
        c.subject = jc.at("subject").get<std::string>();
        c.degree = jc.at("degree").get<unsigned long long>();
        c.passed = jc.at("outcome").get<std::string>() == "pass";
        if (!jc.at("rank_expected").is_null())
            c.rank_expected = jc.at("rank_expected").get<std::size_t>();
        if (!jc.at("rank_found").is_null())
            c.rank_found = jc.at("rank_found").get<std::size_t>();
        if (jc.contains("certificate"))
            c.certificate = jc.at("certificate").get<std::string>();
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

inline std::string report_to_text(const VerificationReport& rep)
{
    std::string out = "p=" + std::to_string(rep.p) + " n=" + std::to_string(rep.n) +
                      " d=" + std::to_string(rep.d) + "\n";
    for (const auto& c : rep.checks) {
        out += std::string(c.passed ? "[pass] " : "[fail] ") + c.kind + " " + c.subject +
               " degree=" + std::to_string(c.degree);
        if (c.rank_expected)
            out += " expected=" + std::to_string(*c.rank_expected);
        if (c.rank_found)
            out += " found=" + std::to_string(*c.rank_found);
        out += "\n";
        if (!c.passed && !c.certificate.empty())
            out += "  certificate: " + c.certificate + "\n";
    }
    out += std::string("overall: ") + (rep.overall() ? "pass" : "fail") + "\n";
    return out;
}

}  // namespace truncsym

#endif  // TRUNCSYM_IO_HPP
