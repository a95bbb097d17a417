#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace hilding {

// Ordered key/value tree rendered either as indented text or as JSON, with
// identical fields in identical order. Doubles print in shortest round-trip
// form, so identical runs give identical bytes.
class Report {
 public:
  Report();
  Report(Report&&) noexcept;
  Report& operator=(Report&&) noexcept;
  ~Report();

  void put(const std::string& key, const std::string& value);
  void put(const std::string& key, const char* value);
  void put(const std::string& key, double value);
  void put(const std::string& key, int value);
  void put(const std::string& key, long value);
  void put(const std::string& key, bool value);
  void put(const std::string& key, std::complex<double> value);

  // nested object; the reference stays valid for the report's lifetime
  Report section(const std::string& key);
  // array of objects
  Report list_item(const std::string& key);
  // array of numbers
  void push(const std::string& key, double value);

  std::string render_text() const;
  std::string render_json() const;

  static std::string format_double(double v);

 private:
  struct Node;
  explicit Report(Node* borrowed);
  Node* node_;                   // the object this view writes into
  std::unique_ptr<Node> owned_;  // set only on the root
};

}  // namespace hilding
