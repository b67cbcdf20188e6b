#ifndef KG2I_LITERAL_H_
#define KG2I_LITERAL_H_

#include <optional>
#include <string>
#include <string_view>

namespace kg2i {

enum class LiteralKind { kTime, kQuantity, kString };

std::string_view LiteralKindName(LiteralKind kind);
std::optional<LiteralKind> ParseLiteralKind(std::string_view name);

enum class TimePrecision { kYear, kMonth, kDay };

// Non-item claim value in canonical form.
//
//   time      "YYYY", "YYYY-MM" or "YYYY-MM-DD" (optional leading '-' for BCE).
//             Wikidata-style "+1960-11-01T00:00:00Z" is accepted on input;
//             zero month/day fields lower the precision.
//   quantity  decimal without sign '+', thousands separators, leading zeros
//             or trailing fractional zeros.
//   string    any non-empty string, kept verbatim.
class Literal {
 public:
  // Throws ParseError when the value is not valid for the kind.
  static Literal Parse(LiteralKind kind, std::string_view value);

  LiteralKind kind() const { return kind_; }
  const std::string &value() const { return value_; }
  TimePrecision precision() const { return precision_; }

  // Time components; only meaningful for kTime.
  int year() const { return year_; }
  int month() const { return month_; }
  int day() const { return day_; }

  std::string ToString() const { return value_; }

  bool operator==(const Literal &other) const {
    return kind_ == other.kind_ && value_ == other.value_;
  }

 private:
  LiteralKind kind_ = LiteralKind::kString;
  std::string value_;
  TimePrecision precision_ = TimePrecision::kDay;
  int year_ = 0;
  int month_ = 0;
  int day_ = 0;
};

}  // namespace kg2i

#endif  // KG2I_LITERAL_H_
