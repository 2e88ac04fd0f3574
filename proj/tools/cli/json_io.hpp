// json_io.hpp - JSON views of library results for RunReport payloads.
#ifndef CHIPFIRE_CLI_JSON_IO_HPP
#define CHIPFIRE_CLI_JSON_IO_HPP

#include <json.hpp>

#include "chipfire/chipfire.hpp"

namespace chipfire::cli {

using nlohmann::json;

json to_json(const srg::SrgParams& p);
json to_json(const FamilyTag& tag);
json to_json(const GameTrace& t, const FiringStrategy& strategy, std::int64_t cutoff_used);
json to_json(const Divergence& d);
json to_json(const BoundReport& b);
json to_json(const BoundTable& t);
json to_json(const spectral::PenroseResiduals& r);
json spectral_report(const GraphAnalysis& a, const spectral::PenroseResiduals& r);
json srg_report(const srg::SrgParams& p);

}  // namespace chipfire::cli

#endif  // CHIPFIRE_CLI_JSON_IO_HPP
