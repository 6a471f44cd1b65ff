#pragma once

#include <nlohmann/json.hpp>

#include "surgery/chain_complex.hpp"
#include "surgery/obstruction.hpp"
#include "surgery/zx.hpp"

namespace surgery {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Simplex& s);
ordered_json to_json(const HomologySummary& h);
ordered_json to_json(const IntMatrix& m);
ordered_json to_json(const SparseIntMatrix& m);
ordered_json to_json(const ManifoldCheckResult& r);
ordered_json to_json(const ObstructionReport& r);
ordered_json to_json(const StructureDefectReport& r);

/// Ranks, differentials and the parallel label table of a labeled complex.
ordered_json zx_dump(const ZXComplex& c);

} // namespace surgery
