#ifndef CONVEX_BLOCKERS_JSON_IO_H_
#define CONVEX_BLOCKERS_JSON_IO_H_

#include <vector>

#include "json.hpp"

#include "convex_blockers/blockers.h"
#include "convex_blockers/geometry.h"
#include "convex_blockers/oracle.h"
#include "convex_blockers/verify.h"

namespace convex_blockers {

using Json = nlohmann::json;

// [[a,b],...]
Json EdgesToJson(const std::vector<Edge>& edges);
EdgeSet EdgesFromJson(const PolygonContext& ctx, const Json& json);

Json EdgeSetsToJson(const std::vector<EdgeSet>& sets);
std::vector<EdgeSet> EdgeSetsFromJson(const PolygonContext& ctx,
                                      const Json& json);

// {"m":6,"start":0,"t":3,"eps":[1,2,4],"edges":[[0,1],...]}
Json BlockerToJson(const PolygonContext& ctx, const BlockerSpec& spec);
// Reads the spec and checks the stored edges against it. Throws InputError on
// malformed documents.
BlockerSpec BlockerFromJson(const Json& json);

// {"ok":false,"violation":"<name>","witness":[...]}
Json FindingToJson(const Finding& finding);
Finding FindingFromJson(const PolygonContext& ctx, const Json& json);

Json CaterpillarReportToJson(const CaterpillarReport& report);

// {"m":4,"mode":"class_pruned","minimum_size":4,"count":32,"sets":[...],
//  "nodes":N,"millis":T}
Json OracleResultToJson(const PolygonContext& ctx, const OracleResult& result);
OracleResult OracleResultFromJson(const Json& json);

Json ReportToJson(const VerificationReport& report);
VerificationReport ReportFromJson(const Json& json);

// Machine integers where they fit, decimal strings beyond that.
Json BigIntToJson(const BigInt& value);
BigInt BigIntFromJson(const Json& json);

}  // namespace convex_blockers

#endif  // CONVEX_BLOCKERS_JSON_IO_H_
