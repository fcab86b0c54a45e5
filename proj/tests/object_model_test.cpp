#include <doctest.h>

#include "psi/error.hpp"
#include "psi/object_model.hpp"
#include "psi/syntax/parser.hpp"

using namespace psi;
using namespace psi::model;

namespace {

void load(Registry& r, const char* src) {
  for (const auto& item : syntax::parse_program(src).items) {
    if (const auto* o = std::get_if<syntax::ObjectDecl>(&item)) {
      r.define_object(*o);
    } else {
      r.define_method(std::get<std::shared_ptr<const syntax::FunctionDecl>>(item));
    }
  }
}

ErrorCode error_of(Registry& r, const char* src) {
  try {
    load(r, src);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::runtime;
}

const char* kHierarchy = R"(
  Group = Object;
    function infix +(A, B : Group) : Group;
    function prefix -(A : Group) : Group;
  end;
  Algebra = Object(Group);
    function infix *(A, B : Algebra) : Algebra;
  end;
  Complex = Object(Algebra);
    Re, Im : integer;
    function infix *(A, B : Complex) : Complex;
  end;
)";

}  // namespace

TEST_CASE("the registry starts with integer") {
  Registry r;
  CHECK(r.lookup("integer") == kIntegerType);
  CHECK(r.size() == 1);
  CHECK(!r.complex_type());
}

TEST_CASE("methods resolve along the ancestor chain") {
  Registry r;
  load(r, kHierarchy);
  const TypeId group = r.require("Group");
  const TypeId algebra = r.require("Algebra");
  const TypeId complex = r.require("Complex");
  const Operator plus{"+", Fixity::infix};
  const Operator times{"*", Fixity::infix};
  CHECK(r.resolve_method(complex, plus).owner == group);
  CHECK(r.resolve_method(complex, times).owner == complex);
  CHECK(r.resolve_method(algebra, times).owner == algebra);
  CHECK(r.find_method(group, times) == nullptr);
  try {
    r.resolve_method(group, times);
    FAIL("resolved");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_such_method);
  }
  // Prefix and infix minus are different methods.
  CHECK(r.find_method(complex, {"-", Fixity::prefix}) != nullptr);
  CHECK(r.find_method(complex, {"-", Fixity::infix}) == nullptr);
}

TEST_CASE("descent and promotion") {
  Registry r;
  load(r, kHierarchy);
  const TypeId group = r.require("Group");
  const TypeId complex = r.require("Complex");
  CHECK(r.is_descendant(complex, group));
  CHECK(!r.is_descendant(group, complex));
  CHECK(r.is_descendant(complex, complex));
  CHECK(r.accepts_integer_promotion(group));
  CHECK(r.accepts_integer_promotion(complex));
  CHECK(!r.accepts_integer_promotion(kIntegerType));
  CHECK(r.kind_compatible({group, Kind::value}, {complex, Kind::functional_object}));
  CHECK(r.kind_compatible({complex, Kind::value}, {kIntegerType, Kind::value}));
  CHECK(r.kind_compatible({complex, Kind::value}, {kFailType, Kind::value}));
  CHECK(!r.kind_compatible({complex, Kind::value}, {group, Kind::value}));
}

TEST_CASE("fields accumulate, ancestors first") {
  Registry r;
  load(r, kHierarchy);
  load(r, "Tagged = Object(Complex); Tag : integer; end;");
  const auto fields = r.all_fields(r.require("Tagged"));
  REQUIRE(fields.size() == 3);
  CHECK(fields[0].name == "Re");
  CHECK(fields[2].name == "Tag");
}

TEST_CASE("registry errors") {
  Registry r;
  load(r, kHierarchy);
  CHECK(error_of(r, "Group = Object;") == ErrorCode::duplicate_type);
  CHECK(error_of(r, "Ring = Object(Nothing);") == ErrorCode::unknown_ancestor);
  CHECK(error_of(r, "Bad = Object(Complex); Re : integer; end;") == ErrorCode::field_shadowing);
  CHECK(error_of(r, "Bad = Object; X : Nothing; end;") == ErrorCode::unknown_type);
  CHECK(error_of(r, "Bad = Object(Group); function infix +(A : Bad; B : Bad; C : Bad) : Bad; end;") ==
        ErrorCode::arity);
  // The result of an override must descend from the inherited result.
  CHECK(error_of(r, "Bad = Object(Algebra); function infix *(A, B : Bad) : integer; end;") ==
        ErrorCode::signature_mismatch);
  // A failed declaration leaves nothing behind.
  CHECK(!r.lookup("Bad"));
  CHECK(error_of(r, R"(
    function Complex.infix *(A, B : Algebra) : Complex;
    begin Return := A end;)") == ErrorCode::signature_mismatch);
}

TEST_CASE("covariant override is accepted") {
  Registry r;
  load(r, kHierarchy);
  CHECK(r.resolve_method(r.require("Complex"), {"*", Fixity::infix}).result == r.require("Complex"));
}

TEST_CASE("definitions fill declared headers") {
  Registry r;
  load(r, kHierarchy);
  const TypeId complex = r.require("Complex");
  CHECK(r.resolve_method(complex, {"*", Fixity::infix}).is_formal());
  load(r, R"(
    function Complex.infix *(A, B : Complex) : Complex;
    begin Return := A end;)");
  CHECK(!r.resolve_method(complex, {"*", Fixity::infix}).is_formal());
  // An unqualified operator belongs to its first parameter's type.
  load(r, R"(
    function infix -(A, B : Complex) : Complex;
    begin Return := A end;)");
  CHECK(r.resolve_method(complex, {"-", Fixity::infix}).owner == complex);
}
