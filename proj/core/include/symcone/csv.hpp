#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace symcone {

// Comma separated, '.' decimal point, header row, LF line endings; doubles
// are printed with 17 significant digits so values round-trip exactly.
class CsvWriter {
 public:
  using Cell = std::variant<std::int64_t, double, std::monostate>;

  // Creates parent directories as needed; throws IoError on failure.
  CsvWriter(const std::filesystem::path& path,
            const std::vector<std::string>& header);

  void row(const std::vector<Cell>& cells);
  void close();

  static std::string format_double(double v);

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t columns_;
};

// Reads a CSV produced by CsvWriter. Empty cells become std::nullopt.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;

  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace symcone
