#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bindingfactor/binding.hpp"
#include "bindingfactor/factors.hpp"
#include "bindingfactor/harness.hpp"
#include "bindingfactor/matching.hpp"
#include "bindingfactor/properties.hpp"

namespace bindingfactor::cli {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

inline constexpr const char* kSchema = "bindingfactor/1";

/// Certificate kinds. LEBENSOLD_VIOLATOR and PARAMETER extend the base set.
enum class CertKind { Binding, Factor, Barrier, Matchings, TutteWitness, LebensoldViolator, Parameter, Report };

std::string kind_name(CertKind kind);

/// Skeleton {"schema","kind","input_graph6","parameters"}; payload fields are
/// added at the top level by the callers.
Json certificate(CertKind kind, const Graph* g, Json parameters);

Json to_json(const VertexSet& s);
Json to_json(const std::vector<Edge>& edges);
Json to_json(const Matching& m);
Json to_json(const BindingValue& b);
Json to_json(const OrderedPartition& p);
Json to_json(const harness::VerificationReport& r);
Json to_json(const Toughness& t);

VertexSet vertex_set_from_json(const Json& j, std::size_t universe);
std::vector<Edge> edges_from_json(const Json& j);

/// Recomputes every fact a certificate asserts from its input_graph6 and
/// parameters. Returns the list of disagreements (empty means valid).
std::vector<std::string> check_certificate(const Json& cert);

/// Runs the command line; argv[0] is the program name. Exit codes:
/// 0 computed, 1 negative result with certificate, 2 usage or input error.
int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bindingfactor::cli
