#include "helmert/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace helmert {

std::string format_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("reports cannot contain non-finite numbers");
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void JsonWriter::indent() {
  out_.append(2 * stack_.size(), ' ');
}

// Emit comma/newline/indent bookkeeping before a value or key slot.
void JsonWriter::prepare_slot() {
  if (pending_key_) return;  // value follows "key": on the same line
  if (!stack_.empty()) {
    if (!first_in_scope_.back()) out_ += ',';
    out_ += '\n';
    first_in_scope_.back() = false;
    indent();
  }
}

void JsonWriter::begin_object() {
  prepare_slot();
  pending_key_ = false;
  out_ += '{';
  stack_.push_back(true);
  first_in_scope_.push_back(true);
}

void JsonWriter::end_object() {
  const bool empty = first_in_scope_.back();
  stack_.pop_back();
  first_in_scope_.pop_back();
  if (!empty) {
    out_ += '\n';
    indent();
  }
  out_ += '}';
}

void JsonWriter::begin_array() {
  prepare_slot();
  pending_key_ = false;
  out_ += '[';
  stack_.push_back(false);
  first_in_scope_.push_back(true);
}

void JsonWriter::end_array() {
  const bool empty = first_in_scope_.back();
  stack_.pop_back();
  first_in_scope_.pop_back();
  if (!empty) {
    out_ += '\n';
    indent();
  }
  out_ += ']';
}

void JsonWriter::key(std::string_view k) {
  prepare_slot();
  out_ += '"';
  out_ += k;  // keys are always plain identifiers here
  out_ += "\": ";
  pending_key_ = true;
}

void JsonWriter::value(std::string_view s) {
  prepare_slot();
  pending_key_ = false;
  out_ += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      case '\r': out_ += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out_ += buf;
        } else {
          out_ += ch;
        }
    }
  }
  out_ += '"';
}

void JsonWriter::value(double x) {
  prepare_slot();
  pending_key_ = false;
  out_ += format_double(x);
}

void JsonWriter::value(std::int64_t v) {
  prepare_slot();
  pending_key_ = false;
  out_ += std::to_string(v);
}

void JsonWriter::value(std::uint64_t v) {
  prepare_slot();
  pending_key_ = false;
  out_ += std::to_string(v);
}

void JsonWriter::value(bool b) {
  prepare_slot();
  pending_key_ = false;
  out_ += b ? "true" : "false";
}

std::string JsonWriter::str() const {
  if (!stack_.empty()) {
    throw std::logic_error("unbalanced JSON document");
  }
  return out_ + "\n";
}

}  // namespace helmert
