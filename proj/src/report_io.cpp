#include "apolar/report_io.hpp"

#include "apolar/errors.hpp"

#include <sstream>

namespace apolar {

namespace {

Json degree_json(const MultiDegree& d) { return Json(d.entries); }

MultiDegree degree_from_json(const Json& j) { return MultiDegree(j.get<std::vector<unsigned>>()); }

Json optional_json(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::uint64_t> optional_from_json(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::uint64_t>();
}

std::string optional_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "n/a"; }

std::string verdict_text(const StarVerdict& v) {
    return "verdict k=" + std::to_string(v.k) + ": target " + std::to_string(v.target) + ", flattening_of_power " +
           std::to_string(v.flattening_of_power) + ", " + (v.certified_by_flattening ? "certified" : "not certified");
}

} // namespace

Json rational_to_json(const Rational& q) {
    return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) {
    Rational q(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
    if (sgn(q.get_den()) == 0) throw StructuralError("rational with zero denominator");
    q.canonicalize();
    return q;
}

Json to_json(const StarVerdict& v) {
    return Json{{"k", v.k},
                {"target", v.target},
                {"certified_by_flattening", v.certified_by_flattening},
                {"flattening_of_power", v.flattening_of_power}};
}

StarVerdict verdict_from_json(const Json& j) {
    StarVerdict v;
    v.k = j.at("k").get<unsigned>();
    v.target = j.at("target").get<std::uint64_t>();
    v.certified_by_flattening = j.at("certified_by_flattening").get<bool>();
    v.flattening_of_power = j.at("flattening_of_power").get<std::uint64_t>();
    return v;
}

Json to_json(const BoundReport& r) {
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
    return Json{
        {"input", {{"multidegree", degree_json(r.input.mdeg)}, {"groups", r.input.groups}, {"terms", r.input.terms}}},
        {"dimA", r.dim_algebra},
        {"delta", degree_json(r.delta)},
        {"rs_value", rational_to_json(r.rs_value)},
        {"rs_floor", r.rs_floor},
        {"rs_scope", to_string(r.rs_scope)},
        {"flattening", r.flattening},
        {"ccg_rank", optional_json(r.ccg_rank)},
        {"lt_border_upper", optional_json(r.lt_border_upper)},
        {"conjectured_border", optional_json(r.conjectured_border)},
        {"binary_rank", optional_json(r.binary_rank)},
        {"verdicts", verdicts},
    };
}

BoundReport report_from_json(const Json& j) {
    BoundReport r;
    const Json& in = j.at("input");
    r.input = {degree_from_json(in.at("multidegree")), in.at("groups").get<std::size_t>(),
               in.at("terms").get<std::size_t>()};
    r.dim_algebra = j.at("dimA").get<std::uint64_t>();
    r.delta = degree_from_json(j.at("delta"));
    r.rs_value = rational_from_json(j.at("rs_value"));
    r.rs_floor = j.at("rs_floor").get<std::uint64_t>();
    r.rs_scope = rs_scope_from_string(j.at("rs_scope").get<std::string>());
    r.flattening = j.at("flattening").get<std::uint64_t>();
    r.ccg_rank = optional_from_json(j.at("ccg_rank"));
    r.lt_border_upper = optional_from_json(j.at("lt_border_upper"));
    r.conjectured_border = optional_from_json(j.at("conjectured_border"));
    r.binary_rank = optional_from_json(j.at("binary_rank"));
    for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from_json(v));
    return r;
}

Json to_json(const HilbertTable& table) {
    Json values = Json::array();
    for (const auto& [e, v] : table.values) values.push_back(Json{{"e", degree_json(e)}, {"dim", v}});
    return Json{{"dmax", degree_json(table.dmax)}, {"values", values}, {"total", table.total()}, {"max", table.max()}};
}

Json to_json(const GeneratorProfile& profile) {
    Json gens = Json::array();
    for (const auto& g : profile.generators) gens.push_back(Json{{"degree", degree_json(g.degree)}, {"count", g.count}});
    return Json{{"generators", gens}, {"delta", degree_json(profile.delta)}};
}

Json to_json(const AsymptoticSequence& seq, const std::vector<StarVerdict>& verdicts) {
    Json terms = Json::array();
    for (const auto& t : seq.terms) terms.push_back(Json{{"k", t.k}, {"bound", t.bound}, {"root", t.root}});
    Json vs = Json::array();
    for (const auto& v : verdicts) vs.push_back(to_json(v));
    return Json{{"sequence", terms}, {"best_k", seq.best_k}, {"best_root", seq.best_root}, {"verdicts", vs}};
}

std::string to_text(const BoundReport& r) {
    std::ostringstream out;
    out << "multidegree: " << to_string(r.input.mdeg) << '\n'
        << "groups: " << r.input.groups << '\n'
        << "terms: " << r.input.terms << '\n'
        << "dimA: " << r.dim_algebra << '\n'
        << "delta: " << to_string(r.delta) << '\n'
        << "rs_value: " << r.rs_value.get_num().get_str() << '/' << r.rs_value.get_den().get_str() << '\n'
        << "rs_floor: " << r.rs_floor << '\n'
        << "rs_scope: " << to_string(r.rs_scope) << '\n'
        << "flattening: " << r.flattening << '\n'
        << "ccg_rank: " << optional_text(r.ccg_rank) << '\n'
        << "lt_border_upper: " << optional_text(r.lt_border_upper) << '\n'
        << "conjectured_border: " << optional_text(r.conjectured_border) << '\n'
        << "binary_rank: " << optional_text(r.binary_rank) << '\n';
    for (const auto& v : r.verdicts) out << verdict_text(v) << '\n';
    return out.str();
}

std::string to_text(const HilbertTable& table) {
    std::ostringstream out;
    out << "dmax: " << to_string(table.dmax) << '\n';
    for (const auto& [e, v] : table.values) out << "HF" << to_string(e) << ": " << v << '\n';
    out << "total: " << table.total() << '\n' << "max: " << table.max() << '\n';
    return out.str();
}

std::string to_text(const GeneratorProfile& profile) {
    std::ostringstream out;
    for (const auto& g : profile.generators) out << "generators" << to_string(g.degree) << ": " << g.count << '\n';
    out << "delta: " << to_string(profile.delta) << '\n';
    return out.str();
}

std::string to_text(const AsymptoticSequence& seq, const std::vector<StarVerdict>& verdicts) {
    std::ostringstream out;
    for (const auto& t : seq.terms) out << "k=" << t.k << ": bound " << t.bound << ", root " << t.root << '\n';
    out << "best_k: " << seq.best_k << '\n' << "best_root: " << seq.best_root << '\n';
    for (const auto& v : verdicts) out << verdict_text(v) << '\n';
    return out.str();
}

} // namespace apolar
