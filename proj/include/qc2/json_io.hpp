#ifndef QC2_JSON_IO_HPP
#define QC2_JSON_IO_HPP

#include <iosfwd>

#include <json.hpp>

#include "qc2/classify.hpp"

namespace qc2 {

// Insertion-ordered JSON keeps every serialization byte-stable across runs.
using Json = nlohmann::ordered_json;

Json element_to_json(const FieldElement& e);
FieldElement element_from_json(const FieldPtr& field, const Json& j);

Json ga_to_json(const GroupAlgebraElement& a);
GroupAlgebraElement ga_from_json(const GroupAlgebraPtr& alg, const Json& j);

Json goursat_to_json(const GoursatData& d);
GoursatData goursat_from_json(const IdempotentBasisPtr& basis, const Json& j);

Json report_to_json(const ClassificationReport& r);

Json matrix_to_json(const Matrix& m);

/// Matrix file format: first line "rows cols", then one line per row of
/// space-separated element tokens.
Matrix read_matrix(std::istream& in, const FieldPtr& field);
void write_matrix(std::ostream& out, const Matrix& m);

/// Generator-pair file format: one pair per line,
/// "a0,a1,...,a_{n-1} | b0,b1,...,b_{n-1}".
std::vector<GeneratorPair> read_generator_pairs(std::istream& in,
                                                const GroupAlgebraPtr& alg);
void write_generator_pairs(std::ostream& out, const std::vector<GeneratorPair>& gens);

}  // namespace qc2

#endif
