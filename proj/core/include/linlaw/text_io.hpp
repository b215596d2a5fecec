#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>

#include "linlaw/markov.hpp"
#include "linlaw/series.hpp"

namespace linlaw {

/// Plain-text matrix: the dimension on the first line, then that many rows
/// of that many decimal entries, row-major. Entry (x, y) is the probability
/// of y -> x, so columns index source states. Blank lines and lines starting
/// with '#' are ignored. Throws ParseError.
Matrix read_matrix_text(std::istream& in);
void write_matrix_text(std::ostream& out, const Matrix& m);

/// Reads and validates a transfer matrix file. With normalize set, columns
/// are rescaled to sum to one before validation (for published matrices
/// whose rounded entries miss the column-sum tolerance). Throws
/// UnreadableSource, ParseError, NotSquare or NotStochastic.
TransferMatrix load_transfer_matrix(const std::filesystem::path& path, bool normalize = false);

/// Newline-delimited state indices.
void write_series(std::ostream& out, const CategoricalSeries& series);

/// Reads newline-delimited nonnegative integers. The alphabet defaults to
/// max + 1. Throws ParseError on a bad line, BadParameter if empty.
CategoricalSeries read_series(std::istream& in, std::optional<std::size_t> alphabet_size = {});

}  // namespace linlaw
