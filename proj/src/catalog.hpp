#ifndef KMSS_CATALOG_HPP
#define KMSS_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vogan.hpp"

namespace kmss {

/// One classification table of the real-form catalog, keyed by series and
/// rank parity exactly as the source tables are.
enum class TableId { AOne, ATwo, AOdd, AEven, Bn, COdd, CEven, DEven, DOdd };

std::string table_name(TableId t);
/// Table for a concrete affine diagram; n is the table's rank parameter.
std::pair<TableId, int> table_for(Series s, int rank);
/// Classical rank for a table at parameter n.
int table_rank(TableId t, int n);

/// A catalog row instantiated at a concrete rank parameter (and painted
/// position p where applicable; p = -1 renders symbolic parameters).
struct InstantiatedRow {
  std::string id;
  std::string real_form;
  std::string fixed_algebra;
  std::string compact_space;
  std::string noncompact_space;
  std::string constraint;
  bool disputed = false;
  std::string note;
};

struct RowFixture {
  VoganDiagram vd;
  int p = -1;
};

/// Catalog row: pattern + renderers + the simple-root recipe of the fixed
/// algebra.  Fixtures enumerate the concrete diagrams the row covers at a
/// given parameter; rows earlier in a table win ties (the tables list
/// special positions before the generic families).
struct CatalogRow {
  TableId table;
  std::string id;
  std::function<bool(int n)> listed;  // rank constraint for table emission
  std::function<InstantiatedRow(int n, int p)> instantiate;
  std::function<std::vector<RowFixture>(int n)> fixtures;
  /// Extra fixed-algebra simple roots beyond the procedural base set
  /// (empty when the catalog says "compact simple roots only").
  std::function<std::vector<std::vector<Rational>>(int n, int p)> extra_roots;
  /// Catalog's own transcribed full list, for cross-checking; empty when the
  /// transcribed list is exactly base + extras.
  std::function<std::vector<std::vector<Rational>>(int n, int p)> transcribed_roots;
};

const std::vector<CatalogRow>& catalog_rows(TableId t);

struct ClassifyResult {
  bool classified = false;
  std::string row_id;
  InstantiatedRow row;
  int p = -1;
  VoganDiagram reduced;
};

/// Reduces vd and looks it up in the catalog.
ClassifyResult classify(const VoganDiagram& vd);

/// Regenerates a table's rows at parameter n; format "md" or "csv".
std::string emit_table(TableId t, int n, const std::string& format);

struct FixedAlgebraRoots {
  std::string label;
  std::vector<std::vector<Rational>> simple_roots;
  bool matches_catalog = true;
  std::string note;
};

/// Simple roots of the fixed algebra per the catalog procedure: roots of
/// unpainted automorphism-fixed nodes, averages of 2-element orbits, plus
/// the row's cataloged extras.  The affine node contributes minus the
/// largest root.  Errors on diagrams absent from the catalog.
FixedAlgebraRoots fixed_algebra_roots(const VoganDiagram& vd);

/// Procedural base set alone (exposed for tests).
std::vector<std::vector<Rational>> base_fixed_roots(const VoganDiagram& vd);

}  // namespace kmss

#endif  // KMSS_CATALOG_HPP
