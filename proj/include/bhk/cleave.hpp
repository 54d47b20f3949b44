#pragma once

// Kreuzer-Skarke cleaves: two invertible exponent matrices that differ in a
// single row, where one version of the row is x_k^a and the other is
// x_k^a' x_h (one arrow k -> h of the diagram).

#include <optional>
#include <string>
#include <vector>

#include "bhk/linalg.hpp"

namespace bhk {

enum class CleaveDirection { ArrowRemoved, ArrowAdded };
std::string_view to_string(CleaveDirection d);

struct Cleave {
  IntMatrix A;  // rows normalized: row i leads with x_i
  IntMatrix A2; // A' in the same normalization
  std::size_t k = 0;
  CleaveDirection direction = CleaveDirection::ArrowRemoved;
  /// Head of the arrow k -> head carried by the non-Fermat row.
  std::size_t head = 0;
  /// Variables of the chain that starts at the head once the arrow is gone.
  std::vector<std::size_t> index_set;

  [[nodiscard]] const IntMatrix& arrow_matrix() const {
    return direction == CleaveDirection::ArrowRemoved ? A : A2;
  }
  [[nodiscard]] const IntMatrix& fermat_matrix() const {
    return direction == CleaveDirection::ArrowRemoved ? A2 : A;
  }
  /// The same cleave read from A' to A.
  [[nodiscard]] Cleave reversed() const;
};

struct CleaveDetection {
  std::optional<Cleave> cleave;
  std::string reason; // empty on success
};

/// Never throws for malformed pairs; the reason says why they do not form a
/// cleave.
CleaveDetection detect_cleave(const IntMatrix& a, const IntMatrix& a2);

/// Reorders rows so that row i leads with x_i. Throws NotInvertibleShape.
IntMatrix normalized_matrix(const IntMatrix& a);

} // namespace bhk
