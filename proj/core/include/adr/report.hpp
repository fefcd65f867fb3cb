#pragma once

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "adr/qh.hpp"

namespace adr {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json basis_report(const Presentation& pres);
Json stratify_report(const AdrModule& adr, const StratTable& table);
Json chain_report_json(const AdrModule& adr, const Chain& chain, const ChainReport& report,
                       const std::string& mode);
Json gldim_report(const AdrModule& adr, const StratTable& table, const GlobalDimension& g);
Json thm2_report_json(const Thm2Report& rep);
Json qh_report_json(const BasicAlgebra& b, const OrderSpec& order, const StrongQhResult& r);
Json search_report(const AdrModule& adr, const FoundChain& fc);
Json dump_basic_algebra(const BasicAlgebra& b);

}  // namespace adr
