#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "linlaw/error.hpp"
#include "linlaw/reference_chains.hpp"
#include "linlaw/text_io.hpp"

using namespace linlaw;

namespace {

const std::filesystem::path kData{LINLAW_DATA_DIR};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no linlaw::Error thrown";
  return ErrorCode::BadParameter;
}

Matrix parse(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_text(in);
}

}  // namespace

TEST(MatrixText, CommentsAndBlankLines) {
  const auto m = parse("# header\n\n2\n0.25 0.5\n# mid\n0.75 0.5\n");
  EXPECT_EQ(m, (Matrix{{0.25, 0.5}, {0.75, 0.5}}));
}

TEST(MatrixText, RoundTripExact) {
  const Matrix m = normalize_columns(reference_matrix_y_raw());
  std::stringstream buf;
  write_matrix_text(buf, m);
  EXPECT_EQ(read_matrix_text(buf), m);
}

TEST(MatrixText, Errors) {
  EXPECT_EQ(code_of([] { parse(""); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse("two\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse("2\n0.5 x\n0.5 0.5\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse("2\n0.5 0.5 0.5\n0.5 0.5\n"); }), ErrorCode::NotSquare);
  EXPECT_EQ(code_of([] { parse("2\n0.5 0.5\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse("2\n0.5 0.5\n0.5 0.5\n0.5 0.5\n"); }), ErrorCode::NotSquare);
}

TEST(LoadTransferMatrix, ShippedChains) {
  EXPECT_EQ(load_transfer_matrix(kData / "chain_x.txt").matrix(), reference_chain_x().matrix());
  EXPECT_EQ(code_of([] { load_transfer_matrix(kData / "chain_y.txt"); }), ErrorCode::NotStochastic);
  EXPECT_EQ(load_transfer_matrix(kData / "chain_y.txt", true).matrix(),
            reference_chain_y().matrix());
  EXPECT_EQ(code_of([] { load_transfer_matrix(kData / "missing.txt"); }),
            ErrorCode::UnreadableSource);
}

TEST(SeriesText, RoundTrip) {
  const auto s = simulate(reference_chain_y(), kChainYInitial, 1000, 5);
  std::stringstream buf;
  write_series(buf, s);
  EXPECT_EQ(read_series(buf, 4), s);
}

TEST(SeriesText, AlphabetInferredAndErrors) {
  std::istringstream in("0\n2\n\n1\n");
  const auto s = read_series(in);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.alphabet_size(), 3u);

  std::istringstream bad("0\n-1\n");
  EXPECT_EQ(code_of([&] { read_series(bad); }), ErrorCode::ParseError);
  std::istringstream empty("");
  EXPECT_EQ(code_of([&] { read_series(empty); }), ErrorCode::BadParameter);
  std::istringstream too_big("0\n5\n");
  EXPECT_EQ(code_of([&] { read_series(too_big, 2); }), ErrorCode::BadParameter);
}
