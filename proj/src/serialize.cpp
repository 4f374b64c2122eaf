#include "foulkes/serialize.hpp"

#include "foulkes/characters.hpp"
#include "foulkes/errors.hpp"

namespace foulkes {

namespace {

// Multiplicities are emitted as JSON numbers while they fit, strings beyond.
Json integer_json(const BigInt& v)
{
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        throw InputError(std::string("missing field '") + name + "'");
    return j.at(name);
}

BigInt parse_bigint(const Json& j)
{
    BigInt v;
    if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0)
        throw InputError("expected a decimal integer string");
    return v;
}

Partition parse_key(const Json& j)
{
    if (!j.is_string())
        throw InputError("expected a partition string");
    const auto text = j.get<std::string>();
    return text.empty() ? Partition() : parse_partition(text);
}

}  // namespace

Json to_json(const PSeries& f)
{
    Json terms = Json::array();
    for (const auto& [mu, c] : f.terms())
        terms.push_back({{"mu", to_string(mu)}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return {{"degree", f.degree()}, {"terms", std::move(terms)}};
}

PSeries pseries_from_json(const Json& j)
{
    try {
        PSeries f(field(j, "degree").get<int>());
        for (const auto& t : field(j, "terms")) {
            const BigInt den = parse_bigint(field(t, "den"));
            if (den == 0)
                throw InputError("zero denominator");
            f.add(parse_key(field(t, "mu")), ratio(parse_bigint(field(t, "num")), den));
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed series JSON: ") + e.what());
    }
}

Json to_json(const ClassFunction& c)
{
    Json values = Json::array();
    for (const auto& [mu, v] : c.values())
        values.push_back({{"mu", to_string(mu)}, {"value", v.get_str()}});
    return {{"degree", c.degree()}, {"values", std::move(values)}};
}

ClassFunction class_function_from_json(const Json& j)
{
    try {
        ClassFunction c(field(j, "degree").get<int>());
        for (const auto& v : field(j, "values"))
            c.set(parse_key(field(v, "mu")), parse_bigint(field(v, "value")));
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed class function JSON: ") + e.what());
    }
}

Json to_json(const FoulkesShape& s, const DecompositionTable& t)
{
    Json entries = Json::array();
    for (const auto& [lambda, m] : t.entries)
        entries.push_back({{"lambda", to_string(lambda)}, {"mult", integer_json(m)}});
    return {{"a", s.a}, {"b", s.b}, {"entries", std::move(entries)}};
}

std::string to_csv(const DecompositionTable& t)
{
    std::string out = "lambda,mult,dimension\n";
    for (const auto& [lambda, m] : t.entries)
        out += "\"" + to_string(lambda) + "\"," + m.get_str() + "," + dimension(lambda).get_str() + "\n";
    return out;
}

Json to_json(const CensusReport& r)
{
    return {{"a", r.a},
            {"b", r.b},
            {"total", r.total_considered},
            {"zero", r.zero_count},
            {"predicted", r.predicted_count},
            {"elapsed_ms", r.elapsed.count()}};
}

}  // namespace foulkes
