#include "central/ambient.hpp"

#include "central/error.hpp"

namespace central {

Ambient Ambient::finite(FiniteSemigroup s) {
  return Ambient(Kind::finite,
                 std::make_shared<const FiniteSemigroup>(std::move(s)));
}

std::string Ambient::name() const {
  switch (kind_) {
    case Kind::finite:
      return "finite(" + std::to_string(table_->order()) + ")";
    case Kind::additive:
      return "additive";
    case Kind::multiplicative:
      return "multiplicative";
  }
  return "?";
}

bool Ambient::is_element(Value x) const noexcept {
  if (kind_ == Kind::finite) {
    return x >= 0 && static_cast<std::uint64_t>(x) < table_->order();
  }
  return x >= 1;
}

Value Ambient::product(Value a, Value b) const {
  if (!is_element(a) || !is_element(b)) {
    throw ElementOutOfRange("operands " + std::to_string(a) + ", " +
                            std::to_string(b) + " not in " + name());
  }
  Value out = 0;
  switch (kind_) {
    case Kind::finite:
      return table_->product(static_cast<Element>(a), static_cast<Element>(b));
    case Kind::additive:
      if (__builtin_add_overflow(a, b, &out)) throw Overflow("sum overflows int64");
      return out;
    case Kind::multiplicative:
      if (__builtin_mul_overflow(a, b, &out)) throw Overflow("product overflows int64");
      return out;
  }
  return out;
}

const FiniteSemigroup& Ambient::table() const {
  if (kind_ != Kind::finite) throw Error("ambient " + name() + " has no table");
  return *table_;
}

}  // namespace central
