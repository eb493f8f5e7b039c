#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace entroscope {

/// Interned symbol. Two labels are equal iff their ids are equal.
///
/// Ids 0 and 1 are reserved for the silent label (tau) and the short-circuit
/// label (chi); neither can be produced by interning a user string.
class Label {
 public:
  using Id = std::uint32_t;

  constexpr Label() = default;

  static constexpr Label silent() { return Label{0}; }
  static constexpr Label chi() { return Label{1}; }

  /// Interns `name` in the process-wide pool. Throws InvalidArgument for the
  /// reserved spelling "__chi__".
  static Label intern(std::string_view name);

  constexpr Id id() const { return id_; }
  constexpr bool is_silent() const { return id_ == 0; }
  constexpr bool is_chi() const { return id_ == 1; }
  constexpr bool is_reserved() const { return id_ < kFirstUserId; }

  /// Display text: "τ", "χ", or the interned string.
  std::string name() const;

  friend constexpr auto operator<=>(Label, Label) = default;

  static constexpr Id kFirstUserId = 2;
  static constexpr std::string_view kReservedChiSpelling = "__chi__";

 private:
  constexpr explicit Label(Id id) : id_(id) {}
  Id id_ = 0;
};

}  // namespace entroscope

template <>
struct std::hash<entroscope::Label> {
  std::size_t operator()(entroscope::Label l) const noexcept {
    return std::hash<entroscope::Label::Id>{}(l.id());
  }
};
