#include "kg2i/literal.h"

#include <cctype>
#include <cstdio>

#include "kg2i/errors.h"

namespace kg2i {

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int ToInt(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

[[noreturn]] void Invalid(std::string_view kind, std::string_view value) {
  throw ParseError("invalid " + std::string(kind) + " literal '" +
                       std::string(value) + "'",
                   0);
}

}  // namespace

std::string_view LiteralKindName(LiteralKind kind) {
  switch (kind) {
    case LiteralKind::kTime:
      return "time";
    case LiteralKind::kQuantity:
      return "quantity";
    case LiteralKind::kString:
      return "string";
  }
  return "string";
}

std::optional<LiteralKind> ParseLiteralKind(std::string_view name) {
  if (name == "time") return LiteralKind::kTime;
  if (name == "quantity") return LiteralKind::kQuantity;
  if (name == "string") return LiteralKind::kString;
  return std::nullopt;
}

Literal Literal::Parse(LiteralKind kind, std::string_view value) {
  Literal lit;
  lit.kind_ = kind;
  switch (kind) {
    case LiteralKind::kString: {
      if (value.empty()) Invalid("string", value);
      lit.value_ = std::string(value);
      return lit;
    }
    case LiteralKind::kTime: {
      std::string_view v = value;
      bool negative = false;
      if (!v.empty() && (v[0] == '+' || v[0] == '-')) {
        negative = v[0] == '-';
        v.remove_prefix(1);
      }
      if (auto t = v.find('T'); t != std::string_view::npos) v = v.substr(0, t);
      std::string_view parts[3];
      int count = 0;
      for (size_t pos = 0;;) {
        if (count == 3) Invalid("time", value);
        size_t dash = v.find('-', pos);
        if (dash == std::string_view::npos) {
          parts[count++] = v.substr(pos);
          break;
        }
        parts[count++] = v.substr(pos, dash - pos);
        pos = dash + 1;
      }
      if (!AllDigits(parts[0]) || parts[0].size() < 4) Invalid("time", value);
      for (int i = 1; i < count; ++i) {
        if (!AllDigits(parts[i]) || parts[i].size() != 2) Invalid("time", value);
      }
      lit.year_ = ToInt(parts[0]);
      lit.month_ = count > 1 ? ToInt(parts[1]) : 0;
      lit.day_ = count > 2 ? ToInt(parts[2]) : 0;
      if (lit.month_ > 12 || lit.day_ > 31) Invalid("time", value);
      if (lit.month_ == 0) lit.day_ = 0;
      lit.precision_ = lit.month_ == 0   ? TimePrecision::kYear
                       : lit.day_ == 0 ? TimePrecision::kMonth
                                       : TimePrecision::kDay;
      if (negative) lit.year_ = -lit.year_;
      char buf[32];
      int y = lit.year_ < 0 ? -lit.year_ : lit.year_;
      int n = std::snprintf(buf, sizeof(buf), "%s%04d", negative ? "-" : "", y);
      lit.value_.assign(buf, n);
      if (lit.precision_ != TimePrecision::kYear) {
        n = std::snprintf(buf, sizeof(buf), "-%02d", lit.month_);
        lit.value_.append(buf, n);
      }
      if (lit.precision_ == TimePrecision::kDay) {
        n = std::snprintf(buf, sizeof(buf), "-%02d", lit.day_);
        lit.value_.append(buf, n);
      }
      return lit;
    }
    case LiteralKind::kQuantity: {
      std::string_view v = value;
      bool negative = false;
      if (!v.empty() && (v[0] == '+' || v[0] == '-')) {
        negative = v[0] == '-';
        v.remove_prefix(1);
      }
      std::string integer, fraction;
      size_t dot = v.find('.');
      std::string_view int_part = v.substr(0, dot);
      std::string_view frac_part =
          dot == std::string_view::npos ? std::string_view() : v.substr(dot + 1);
      if (dot != std::string_view::npos && frac_part.empty()) {
        Invalid("quantity", value);
      }
      for (char c : int_part) {
        if (c == ',') continue;
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          Invalid("quantity", value);
        }
        integer.push_back(c);
      }
      if (integer.empty()) Invalid("quantity", value);
      if (!frac_part.empty() && !AllDigits(frac_part)) Invalid("quantity", value);
      fraction = std::string(frac_part);
      size_t nz = integer.find_first_not_of('0');
      integer = nz == std::string::npos ? "0" : integer.substr(nz);
      while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
      bool zero = integer == "0" && fraction.empty();
      lit.value_ = (negative && !zero ? "-" : "") + integer;
      if (!fraction.empty()) lit.value_ += "." + fraction;
      return lit;
    }
  }
  return lit;
}

}  // namespace kg2i
