#pragma once

#include "monogen/dedekind.hpp"
#include "monogen/family.hpp"
#include "monogen/monogenity.hpp"
#include "monogen/newton.hpp"
#include "monogen/quartic.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monogen {

using Json = nlohmann::ordered_json;

inline constexpr const char* kAnalyzeSchema = "monogen.analyze/1";
inline constexpr const char* kDedekindSchema = "monogen.dedekind/1";
inline constexpr const char* kPolygonSchema = "monogen.polygon/1";
inline constexpr const char* kQuarticSchema = "monogen.quartic/1";
inline constexpr const char* kCorpusSchema = "monogen.corpus/1";

// Per-solution check against the discriminant oracle.
struct OracleCheck {
    Triple xyz;
    std::optional<Integer> index;  // empty when the oracle could not run
    std::string error;
};

struct CorpusRow {
    std::string label;
    IntPoly f;
    std::optional<Verdict> verdict;  // empty on analysis error
    std::string error;
    OracleResult oracle;
    bool agrees = false;
};

Json to_json(const Integer& n);
Json to_json(const IntPoly& f);
Json to_json(const Factorization& fac);
Json to_json(const IndexValuation& v);

Json analyze_json(const MonogenityReport& report);
Json dedekind_json(const IntPoly& f, const std::vector<DedekindResult>& results);
// Reports for the selected phi factors of one Ore analysis.
Json polygon_json(const IntPoly& f, const OreAnalysis& analysis, const std::vector<std::size_t>& selected);
Json quartic_json(const GeneratorSearch& search, const std::optional<Integer>& disc_k,
                  const std::vector<OracleCheck>& checks);
Json corpus_json(const std::string& family, const std::vector<CorpusRow>& rows);

} // namespace monogen
