#ifndef INLIM_HARNESS_OUTPUT_H_
#define INLIM_HARNESS_OUTPUT_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace inlim::harness {

// %.17g: 17 significant digits, enough to round-trip every double.
std::string format_double(double v);

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

class Csv {
 public:
  explicit Csv(std::vector<std::string> header);

  template <class... Ts>
  void row(const Ts&... cells) {
    if (sizeof...(Ts) != columns_) throw_width(sizeof...(Ts));
    bool first = true;
    (append(cells, first), ...);
    text_ += '\n';
    ++rows_;
  }

  const std::string& str() const { return text_; }
  std::size_t rows() const { return rows_; }

 private:
  template <class T>
  void append(const T& v, bool& first) {
    if (!first) text_ += ',';
    first = false;
    if constexpr (std::is_same_v<T, bool>) {
      text_ += v ? '1' : '0';
    } else if constexpr (std::is_floating_point_v<T>) {
      text_ += format_double(static_cast<double>(v));
    } else if constexpr (std::is_integral_v<T>) {
      text_ += std::to_string(v);
    } else {
      text_ += std::string_view(v);
    }
  }
  [[noreturn]] void throw_width(std::size_t got) const;

  std::size_t columns_;
  std::size_t rows_ = 0;
  std::string text_;
};

// Parsed CSV: header plus rows of raw fields.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
CsvTable parse_csv(std::string_view text);

// Binary P6 pixmap, 8-bit; black(row, col) selects black pixels, others are
// white.  Row 0 is the top of the image.
std::string p6_pixmap(int width, int height,
                      const std::function<bool(int, int)>& black);

// Writes to a temporary sibling and renames it into place.
void write_atomic(const std::filesystem::path& path, std::string_view data);
std::string read_file(const std::filesystem::path& path);

// Line-oriented key=value run record.
class RunManifest {
 public:
  void set(std::string key, std::string value);
  void set(std::string key, double value);
  void set(std::string key, std::uint64_t value);
  // Records name, size and checksum of an output file.
  void add_file(const std::string& name, std::string_view data);

  std::string str() const;
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Parses manifest (or any key=value) text into ordered pairs.
std::vector<std::pair<std::string, std::string>> parse_key_values(
    std::string_view text);

}  // namespace inlim::harness

#endif  // INLIM_HARNESS_OUTPUT_H_
