#include "bhk/cleave.hpp"

#include "bhk/invertible.hpp"

namespace bhk {

std::string_view to_string(CleaveDirection d) {
  return d == CleaveDirection::ArrowRemoved ? "arrow-removed" : "arrow-added";
}

IntMatrix normalized_matrix(const IntMatrix& a) {
  auto dec = classify(a);
  std::size_t n = a.rows();
  IntMatrix out(n, n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t c = 0; c < n; ++c)
      out(v, c) = a(dec.row_of_var[v], c);
  return out;
}

Cleave Cleave::reversed() const {
  Cleave r = *this;
  std::swap(r.A, r.A2);
  r.direction = direction == CleaveDirection::ArrowRemoved
                    ? CleaveDirection::ArrowAdded
                    : CleaveDirection::ArrowRemoved;
  return r;
}

namespace {

// Column of the single off-diagonal entry of row r, if the row has exactly
// one and it equals 1.
std::optional<std::size_t> arrow_of(const IntMatrix& a, std::size_t r) {
  std::optional<std::size_t> out;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (c == r || a(r, c) == 0)
      continue;
    if (out || a(r, c) != 1)
      return std::nullopt;
    out = c;
  }
  return out;
}

bool fermat_row(const IntMatrix& a, std::size_t r) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (c != r && a(r, c) != 0)
      return false;
  return true;
}

} // namespace

CleaveDetection detect_cleave(const IntMatrix& a_in, const IntMatrix& a2_in) {
  CleaveDetection out;
  if (!a_in.square() || a_in.rows() != a2_in.rows() || a_in.cols() != a2_in.cols()) {
    out.reason = "shape-mismatch";
    return out;
  }
  IntMatrix a, a2;
  try {
    a = normalized_matrix(a_in);
    a2 = normalized_matrix(a2_in);
  } catch (const Error&) {
    out.reason = "not-classifiable";
    return out;
  }
  try {
    if (!(positive_weight_solve(a) == positive_weight_solve(a2))) {
      out.reason = "weights-differ";
      return out;
    }
  } catch (const Error&) {
    out.reason = "no-positive-weights";
    return out;
  }
  std::vector<std::size_t> differing;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != a2(r, c)) {
        differing.push_back(r);
        break;
      }
  if (differing.empty()) {
    out.reason = "identical";
    return out;
  }
  if (differing.size() > 1) {
    out.reason = "rows-differ:" + std::to_string(differing.size());
    return out;
  }
  std::size_t k = differing[0];
  Cleave cl;
  cl.k = k;
  if (fermat_row(a2, k) && arrow_of(a, k)) {
    cl.direction = CleaveDirection::ArrowRemoved;
    cl.head = *arrow_of(a, k);
  } else if (fermat_row(a, k) && arrow_of(a2, k)) {
    cl.direction = CleaveDirection::ArrowAdded;
    cl.head = *arrow_of(a2, k);
  } else {
    out.reason = "not-single-arrow";
    return out;
  }
  cl.A = std::move(a);
  cl.A2 = std::move(a2);
  const IntMatrix& m = cl.arrow_matrix();
  std::size_t cur = cl.head;
  while (cur != k && cl.index_set.size() < m.rows()) {
    cl.index_set.push_back(cur);
    auto next = arrow_of(m, cur);
    if (!next)
      break;
    cur = *next;
  }
  out.cleave = std::move(cl);
  return out;
}

} // namespace bhk
