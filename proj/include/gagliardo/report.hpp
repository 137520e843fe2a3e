#pragma once

#include <string>
#include <vector>

namespace gagliardo {

/// Streaming JSON writer with insertion-ordered keys and numbers printed as
/// decimals with 17 significant digits, so identical runs give identical
/// bytes.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(double v);
  JsonWriter& value(long long v);
  JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v) { return value(std::string(v)); }

  const std::string& str() const { return out_; }

  static std::string format_number(double v);

 private:
  void separate();
  std::string out_;
  std::vector<bool> first_in_scope_;
  bool pending_key_ = false;
};

/// CSV with a mandatory header row and the same number formatting.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<double>& values);
  void row_mixed(const std::vector<std::string>& values);
  const std::string& str() const { return out_; }

 private:
  std::string out_;
  std::size_t columns_;
};

/// Write content to a file, throwing on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace gagliardo
