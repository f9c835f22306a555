#include "jacobsthal/serialize.hpp"

#include <ostream>

namespace jacobsthal {

nlohmann::json witness_to_json(const Witness& witness)
{
    return {
        {"kind", to_string(witness.kind)},
        {"n", witness.n},
        {"a", witness.a.get_str()},
        {"b", witness.b.get_str()},
        {"length", witness.length},
    };
}

namespace {

mpz_class parse_integer(const nlohmann::json& value, const char* field)
{
    if (!value.is_string())
        throw InputError(std::string("witness field '") + field + "' must be a decimal string");
    const auto text = value.get<std::string>();
    mpz_class parsed;
    if (text.empty() || parsed.set_str(text, 10) != 0)
        throw InputError(std::string("witness field '") + field + "' is not a decimal integer: '" + text + "'");
    return parsed;
}

const nlohmann::json& require(const nlohmann::json& object, const char* field)
{
    auto it = object.find(field);
    if (it == object.end())
        throw InputError(std::string("witness is missing '") + field + "'");
    return *it;
}

} // namespace

Witness witness_from_json(const nlohmann::json& document)
{
    if (!document.is_object())
        throw InputError("witness must be a JSON object");
    const auto& object = document.contains("witness") ? document.at("witness") : document;
    if (!object.is_object())
        throw InputError("witness must be a JSON object");

    const auto& kind = require(object, "kind");
    const auto& n = require(object, "n");
    const auto& length = require(object, "length");
    if (!kind.is_string())
        throw InputError("witness field 'kind' must be a string");
    if (!n.is_number_integer() || n.get<std::int64_t>() < 1)
        throw InputError("witness field 'n' must be a positive integer");
    if (!length.is_number_integer())
        throw InputError("witness field 'length' must be an integer");

    Witness witness;
    witness.kind = parse_kind(kind.get<std::string>());
    witness.n = n.get<unsigned>();
    witness.a = parse_integer(require(object, "a"), "a");
    witness.b = parse_integer(require(object, "b"), "b");
    witness.length = length.get<std::int64_t>();
    if (witness.length < 1)
        throw InputError("witness length must be positive");
    if (witness.kind == ProblemKind::Paired && mpz_even_p(mpz_class(witness.b - witness.a).get_mpz_t()) == 0)
        throw InputError("paired witness needs an even difference b - a");
    if (witness.kind == ProblemKind::Classic && witness.a != witness.b)
        throw InputError("classic witness needs b == a");
    return witness;
}

nlohmann::json result_to_json(const ComputationResult& result)
{
    return {
        {"schema", kResultSchemaVersion},
        {"kind", to_string(result.kind)},
        {"n", result.n},
        {"p_n", result.p_n},
        {"h", result.h},
        {"bound", result.bound},
        {"bound_ok", result.bound_ok},
        {"witness", witness_to_json(result.witness)},
        {"stats",
         {
             {"nodes", result.stats.nodes},
             {"feasibility_calls", result.stats.feasibility_calls},
             {"ms", result.stats.wall_time.count()},
         }},
    };
}

std::string csv_row(const ComputationResult& result)
{
    return std::to_string(result.n) + ',' + std::to_string(result.p_n) + ',' + std::to_string(result.h) + ',' +
           std::to_string(result.bound) + ',' + (result.bound_ok ? "true" : "false");
}

void write_csv(std::ostream& out, const std::vector<ComputationResult>& results)
{
    out << kCsvHeader << '\n';
    for (const auto& result : results)
        out << csv_row(result) << '\n';
}

} // namespace jacobsthal
