#include "psi/algebra.hpp"

#include "psi/syntax/parser.hpp"

namespace psi::algebra {

namespace {

constexpr std::string_view kPrelude = R"psi({ prelude }
Group = Object;
  function infix +(A, B : Group) : Group;
  function prefix -(A : Group) : Group;
end;

Algebra = Object(Group);
  function infix *(A, B : Algebra) : Algebra;
end;

function Algebra.infix *(A, B : Algebra) : Algebra;
par C, D, E, F : Algebra;
begin
  if A = C + D then Return := C * B + D * B
  else if B = E + F then Return := A * E + A * F
  else Return := fail
end;

Complex = Object(Algebra);
  Re, Im : integer;
  function infix *(A, B : Complex) : Complex;
  function infix +(A, B : Complex) : Complex;
  function infix -(A, B : Complex) : Complex;
  function prefix -(A : Complex) : Complex;
end;

function Complex.infix *(A, B : Complex) : Complex;
begin
  Return := Algebra.(A * B);
  if Return = fail then
    Return := (A.Re * B.Re - A.Im * B.Im, A.Re * B.Im + A.Im * B.Re)
end;

Monomial = Object(Algebra);
  function infix *(A, B : Monomial) : Monomial;
end;

var i : Complex;
i := Complex(0, 1);
)psi";

const ComplexValue& complex_arg(std::span<const Value> args, std::size_t n) {
  return args[n].as<ComplexValue>();
}

}  // namespace

std::string_view prelude_source() { return kPrelude; }

void load_prelude(eval::Interpreter& interp) {
  auto& registry = interp.registry();
  const auto is_loaded = registry.complex_type();
  if (is_loaded) return;
  interp.execute(syntax::parse_program(kPrelude));

  const TypeId complex = *registry.complex_type();
  // A symbolic operand reaching a native kernel means the caller went
  // through invoke_inherited; keep the application unevaluated.
  auto residual_or = [](Operator op, auto kernel) {
    return [op, kernel](eval::Interpreter& in, std::span<const Value> a) -> Value {
      for (const auto& v : a) {
        if (v.is_symbolic()) return in.build_application(op, {a.begin(), a.end()});
      }
      return kernel(a);
    };
  };
  const Operator plus{"+", Fixity::infix};
  const Operator minus{"-", Fixity::infix};
  const Operator negate{"-", Fixity::prefix};
  registry.bind_native(complex, plus, residual_or(plus, [](std::span<const Value> a) {
                         return Value(complex_add(complex_arg(a, 0), complex_arg(a, 1)));
                       }));
  registry.bind_native(complex, minus, residual_or(minus, [](std::span<const Value> a) {
                         return Value(complex_sub(complex_arg(a, 0), complex_arg(a, 1)));
                       }));
  registry.bind_native(complex, negate, residual_or(negate, [](std::span<const Value> a) {
                         return Value(complex_neg(complex_arg(a, 0)));
                       }));

  const Operator times{"*", Fixity::infix};
  registry.bind_native(*registry.monomial_type(), times,
                       residual_or(times, [](std::span<const Value> a) {
                         return Value(lorentz::register_mul(
                             a[0].as<lorentz::MonomialRegister>(),
                             a[1].as<lorentz::MonomialRegister>()));
                       }));
}

}  // namespace psi::algebra
