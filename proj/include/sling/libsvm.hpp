#pragma once

#include <iosfwd>

#include "sling/dataset.hpp"

namespace sling {

// LIBSVM text format: one sample per line, `<label> <idx>:<val> ...` with
// 1-based strictly increasing indices. `#` starts a comment, blank lines are
// skipped, NaN/Inf values are rejected. Labels are remapped to dense ids in
// ascending numeric order of the distinct raw values; the raw values are kept
// on the Dataset for write-back. The feature dimension is the largest index
// seen unless force_dim pins it (LIBSVM files do not carry d).
Dataset parse_libsvm(std::istream& in, std::int64_t force_dim = 0);
Dataset parse_libsvm_file(const std::string& path, std::int64_t force_dim = 0);

// Inverse of the parser up to comments/whitespace: 17-significant-digit
// values so parse(write(parse(t))) == parse(t) exactly.
void write_libsvm(const Dataset& data, std::ostream& out);

}  // namespace sling
