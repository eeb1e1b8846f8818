#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace helmert {

// Shortest decimal form that parses back to the identical double (%.17g).
// Non-finite values throw: reports must never contain NaN/inf.
std::string format_double(double x);

// Minimal pretty-printing JSON emitter with insertion-ordered fields, two
// space indent, one scalar per line. This is deliberately hand-rolled: the
// report contract promises byte-stable output, so the serializer must not
// change underneath us.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(std::string_view k);
  void value(std::string_view s);
  void value(const char* s) { value(std::string_view{s}); }
  void value(double x);
  void value(std::int64_t v);
  void value(std::uint64_t v);
  void value(bool b);

  // Finished document plus trailing newline.
  std::string str() const;

 private:
  void prepare_slot();
  void indent();
  std::string out_;
  // true entry = inside object, false = inside array
  std::vector<bool> stack_;
  std::vector<bool> first_in_scope_;
  bool pending_key_ = false;
};

}  // namespace helmert
