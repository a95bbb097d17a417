#include "hilding/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace hilding {

struct Report::Node {
  enum class Kind { Object, Array, String, Number, Int, Bool };
  Kind kind = Kind::Object;
  std::string scalar;  // preformatted for leaf kinds
  std::vector<std::pair<std::string, std::unique_ptr<Node>>> fields;  // Object
  std::vector<std::unique_ptr<Node>> items;                           // Array
};

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string Report::format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Report::Report() : owned_(std::make_unique<Node>()) { node_ = owned_.get(); }
Report::Report(Node* borrowed) : node_(borrowed) {}
Report::Report(Report&&) noexcept = default;
Report& Report::operator=(Report&&) noexcept = default;
Report::~Report() = default;

namespace {

std::unique_ptr<Report::Node> scalar_node(Report::Node::Kind kind,
                                          std::string text) {
  auto n = std::make_unique<Report::Node>();
  n->kind = kind;
  n->scalar = std::move(text);
  return n;
}

}  // namespace

void Report::put(const std::string& key, const std::string& value) {
  node_->fields.emplace_back(key, scalar_node(Node::Kind::String, value));
}

void Report::put(const std::string& key, const char* value) {
  put(key, std::string(value));
}

void Report::put(const std::string& key, double value) {
  node_->fields.emplace_back(key,
                             scalar_node(Node::Kind::Number, format_double(value)));
}

void Report::put(const std::string& key, int value) {
  node_->fields.emplace_back(key,
                             scalar_node(Node::Kind::Int, std::to_string(value)));
}

void Report::put(const std::string& key, long value) {
  node_->fields.emplace_back(key,
                             scalar_node(Node::Kind::Int, std::to_string(value)));
}

void Report::put(const std::string& key, bool value) {
  node_->fields.emplace_back(
      key, scalar_node(Node::Kind::Bool, value ? "true" : "false"));
}

void Report::put(const std::string& key, std::complex<double> value) {
  std::string s = format_double(value.real());
  if (value.imag() >= 0 || std::isnan(value.imag())) s += "+";
  s += format_double(value.imag()) + "i";
  node_->fields.emplace_back(key, scalar_node(Node::Kind::String, s));
}

Report Report::section(const std::string& key) {
  auto n = std::make_unique<Node>();
  n->kind = Node::Kind::Object;
  Node* raw = n.get();
  node_->fields.emplace_back(key, std::move(n));
  return Report(raw);
}

Report Report::list_item(const std::string& key) {
  Node* array = nullptr;
  if (!node_->fields.empty() && node_->fields.back().first == key &&
      node_->fields.back().second->kind == Node::Kind::Array) {
    array = node_->fields.back().second.get();
  } else {
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::Array;
    array = n.get();
    node_->fields.emplace_back(key, std::move(n));
  }
  auto item = std::make_unique<Node>();
  item->kind = Node::Kind::Object;
  Node* raw = item.get();
  array->items.push_back(std::move(item));
  return Report(raw);
}

void Report::push(const std::string& key, double value) {
  Node* array = nullptr;
  if (!node_->fields.empty() && node_->fields.back().first == key &&
      node_->fields.back().second->kind == Node::Kind::Array) {
    array = node_->fields.back().second.get();
  } else {
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::Array;
    array = n.get();
    node_->fields.emplace_back(key, std::move(n));
  }
  array->items.push_back(scalar_node(Node::Kind::Number, format_double(value)));
}

namespace {

void render_text_node(const Report::Node& n, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, child] : n.fields) {
    switch (child->kind) {
      case Report::Node::Kind::Object:
        os << pad << key << ":\n";
        render_text_node(*child, os, indent + 1);
        break;
      case Report::Node::Kind::Array:
        os << pad << key << ":\n";
        for (const auto& item : child->items) {
          if (item->kind == Report::Node::Kind::Object) {
            os << pad << "  -\n";
            render_text_node(*item, os, indent + 2);
          } else {
            os << pad << "  - " << item->scalar << "\n";
          }
        }
        break;
      default:
        os << pad << key << ": " << child->scalar << "\n";
    }
  }
}

void render_json_node(const Report::Node& n, std::ostream& os, int indent);

void render_json_value(const Report::Node& n, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  switch (n.kind) {
    case Report::Node::Kind::Object:
      render_json_node(n, os, indent);
      break;
    case Report::Node::Kind::Array: {
      if (n.items.empty()) {
        os << "[]";
        break;
      }
      os << "[\n";
      for (std::size_t i = 0; i < n.items.size(); ++i) {
        os << pad << "  ";
        render_json_value(*n.items[i], os, indent + 1);
        if (i + 1 < n.items.size()) os << ",";
        os << "\n";
      }
      os << pad << "]";
      break;
    }
    case Report::Node::Kind::String:
      os << '"' << escape_json(n.scalar) << '"';
      break;
    case Report::Node::Kind::Number:
      // non-finite values stay strings so the output remains parseable
      if (n.scalar == "inf" || n.scalar == "-inf" || n.scalar == "nan")
        os << '"' << n.scalar << '"';
      else
        os << n.scalar;
      break;
    case Report::Node::Kind::Int:
    case Report::Node::Kind::Bool:
      os << n.scalar;
      break;
  }
}

void render_json_node(const Report::Node& n, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (n.fields.empty()) {
    os << "{}";
    return;
  }
  os << "{\n";
  for (std::size_t i = 0; i < n.fields.size(); ++i) {
    os << pad << "  \"" << escape_json(n.fields[i].first) << "\": ";
    render_json_value(*n.fields[i].second, os, indent + 1);
    if (i + 1 < n.fields.size()) os << ",";
    os << "\n";
  }
  os << pad << "}";
}

}  // namespace

std::string Report::render_text() const {
  std::ostringstream os;
  render_text_node(*node_, os, 0);
  return os.str();
}

std::string Report::render_json() const {
  std::ostringstream os;
  render_json_node(*node_, os, 0);
  os << "\n";
  return os.str();
}

}  // namespace hilding
