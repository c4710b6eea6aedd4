#include "semivar/io.hpp"

#include <charconv>  // for from_chars
#include <fstream>   // for ifstream, ofstream
#include <sstream>   // for ostringstream

#include "semivar/epigroup.hpp"

namespace semivar {

  namespace {

    std::vector<element_type> parse_numbers(std::string_view line,
                                            std::size_t      lineno) {
      std::vector<element_type> out;
      std::size_t               i = 0;
      while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
          ++i;
          continue;
        }
        element_type value = 0;
        auto [ptr, ec]     = std::from_chars(line.data() + i,
                                         line.data() + line.size(),
                                         value);
        if (ec != std::errc() || ptr == line.data() + i) {
          throw ParseError(lineno,
                           "expected a non-negative integer, found '"
                               + std::string(line.substr(i)) + "'");
        }
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - line.data());
      }
      return out;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty()
             && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
      }
      return s;
    }

    void append_row(std::ostringstream& os, std::span<element_type const> row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i != 0) {
          os << ' ';
        }
        os << row[i];
      }
      os << '\n';
    }

  }  // namespace

  TableFile parse_table_text(std::string_view text) {
    TableFile                              file;
    std::optional<std::size_t>             order;
    std::vector<element_type>              entries;
    std::size_t                            rows_read = 0;
    std::size_t                            lineno    = 0;

    while (!text.empty()) {
      auto const       nl   = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
      ++lineno;

      if (!line.empty() && line.front() == '#') {
        file.comments.emplace_back(line.substr(1));
        continue;
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      if (!order) {
        auto values = parse_numbers(line, lineno);
        if (values.size() != 1 || values[0] == 0) {
          throw ParseError(lineno, "expected a positive order on its own line");
        }
        order = values[0];
        continue;
      }
      if (rows_read < *order) {
        auto values = parse_numbers(line, lineno);
        if (values.size() != *order) {
          throw ParseError(lineno,
                           "expected " + std::to_string(*order)
                               + " entries, found "
                               + std::to_string(values.size()));
        }
        entries.insert(entries.end(), values.begin(), values.end());
        ++rows_read;
        continue;
      }
      constexpr std::string_view prefix = "unary:";
      if (line.starts_with(prefix) && !file.unary) {
        auto values = parse_numbers(line.substr(prefix.size()), lineno);
        if (values.size() != *order) {
          throw ParseError(lineno,
                           "unary line needs " + std::to_string(*order)
                               + " entries, found "
                               + std::to_string(values.size()));
        }
        file.unary = std::move(values);
        continue;
      }
      throw ParseError(lineno, "unexpected content '" + std::string(line) + "'");
    }
    if (!order) {
      throw ParseError(lineno, "missing order line");
    }
    if (rows_read != *order) {
      throw ParseError(lineno,
                       "expected " + std::to_string(*order) + " rows, found "
                           + std::to_string(rows_read));
    }
    file.table = CayleyTable(*order, std::move(entries));
    return file;
  }

  std::string format_table_text(TableFile const& file) {
    std::ostringstream os;
    for (auto const& c : file.comments) {
      os << '#' << c << '\n';
    }
    std::size_t const n = file.table.order();
    os << n << '\n';
    for (element_type a = 0; a < n; ++a) {
      append_row(os, file.table.row(a));
    }
    if (file.unary) {
      os << "unary: ";
      append_row(os, *file.unary);
    }
    return os.str();
  }

  std::string format_table_text(CayleyTable const& t) {
    return format_table_text(TableFile{{}, t, std::nullopt});
  }

  std::string format_table_text(UnarySemigroup const& s) {
    return format_table_text(TableFile{{}, s.base(), s.unary()});
  }

  TableFile read_table_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InvalidArgument("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_table_text(buffer.str());
  }

  void write_table_file(std::filesystem::path const& path,
                        TableFile const&             file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw InvalidArgument("cannot write " + path.string());
    }
    out << format_table_text(file);
  }

  UnarySemigroup to_unary_semigroup(TableFile const& file) {
    if (auto err = validate(file.table)) {
      throw InvalidArgument("not a semigroup: " + describe(*err));
    }
    if (file.unary) {
      return attach_unary(file.table, *file.unary);
    }
    return pseudoinverse_map(file.table);
  }

}  // namespace semivar
