// Plain-text Cayley table files.
//
//   # optional comment lines, each starting with '#'
//   3
//   0 1 2
//   1 2 0
//   2 0 1
//   unary: 0 2 1
//
// The first non-comment line is the order n, followed by n rows of n
// space-separated entries and an optional unary line. Comment lines are kept
// and written back at the top, so a file in normal form (comments first,
// single spaces, trailing newline) round-trips byte for byte.

#ifndef SEMIVAR_IO_HPP_
#define SEMIVAR_IO_HPP_

#include <filesystem>   // for path
#include <optional>     // for optional
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "core.hpp"

namespace semivar {

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          _line(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  struct TableFile {
    std::vector<std::string>                 comments;  // without the '#'
    CayleyTable                              table;
    std::optional<std::vector<element_type>> unary;
  };

  // Throws ParseError. Entries are range-checked only by validate().
  [[nodiscard]] TableFile parse_table_text(std::string_view text);
  [[nodiscard]] std::string format_table_text(TableFile const& file);

  [[nodiscard]] TableFile read_table_file(std::filesystem::path const& path);
  void write_table_file(std::filesystem::path const& path,
                        TableFile const&             file);

  [[nodiscard]] std::string format_table_text(CayleyTable const& t);
  [[nodiscard]] std::string format_table_text(UnarySemigroup const& s);

  // The file as a unary semigroup: its own unary line if present (flagged
  // canonical iff it equals the pseudoinverse), else the pseudoinverse.
  // Throws InvalidArgument if the table does not validate.
  [[nodiscard]] UnarySemigroup to_unary_semigroup(TableFile const& file);

}  // namespace semivar

#endif  // SEMIVAR_IO_HPP_
