"""
Evaluation strategies for closed real expressions.

dag
    Every distinct subterm, under the nodes its free variables are bound
    to, becomes one memoized interval name. The root is queried at
    growing indices until its answer is narrow enough, and every node
    only ever computes the indices the root asks for.
tree
    The same names without any sharing: each occurrence of a variable
    rebuilds the subterm bound to it. Aborts once the node cap is reached.
restart
    Plain interval arithmetic at a fixed working precision w, rerun with
    w doubled until the result is narrow enough.
"""
import logging
from typing import Dict, Optional, Tuple

import gmpy2
from gmpy2 import mpz

from paramreals.apps.core.bitcodec import encoded_length
from paramreals.apps.core.choices import STRATEGIES
from paramreals.apps.core.costs import CostTrace, charge
from paramreals.apps.core.dyadic import Dyadic
from paramreals.apps.core.exceptions import DomainError, NodeCapExceeded, ScopeError
from paramreals.apps.core.fuel import Fuel
from paramreals.apps.core.intervals import (
    DyadicInterval,
    FiniteInterval,
    iadd,
    imul,
    ineg,
    isqrt,
    isub,
    outward_round,
    point,
    within_precision,
)
from paramreals.apps.core.meter import query_cost
from paramreals.apps.functions.generators import interval_function
from paramreals.apps.functions.operations import evaluate
from paramreals.apps.reals.arithmetic import as_interval_name, pointwise, real_sqrt
from paramreals.apps.reals.builders import cauchy_of_rational, interval_of_dyadic
from paramreals.apps.reals.names import Name

from .app_settings import app_settings
from .nodes import SQRT, Apply, BinOp, Iterate, Lambda, Neg, Number, Variable, free_variables
from .parser import to_text

logger = logging.getLogger(__name__)

INTERVAL_OPERATIONS = {"+": iadd, "-": isub, "*": imul}


def _checked_denominator(number: Number) -> int:
    if number.denominator == 0:
        raise DomainError(f"{number.numerator}/0 is not a real number")
    return number.denominator


def _is_power_of_two(q: int) -> bool:
    return q > 0 and q & (q - 1) == 0


def literal_name(number: Number) -> Name:
    q = _checked_denominator(number)
    if _is_power_of_two(q):
        return interval_of_dyadic(Dyadic(number.numerator, q.bit_length() - 1))
    return as_interval_name(cauchy_of_rational(number.numerator, q))


def literal_enclosure(number: Number, w: int) -> DyadicInterval:
    """The literal itself when it is dyadic, otherwise its enclosure on the 2^(-w) grid"""
    q = _checked_denominator(number)
    p = number.numerator
    if _is_power_of_two(q):
        return point(Dyadic(p, q.bit_length() - 1))
    if q < 0:
        p, q = -p, -q
    p, q = mpz(p), mpz(q)
    charge((w + 1) * max(1, q.bit_length()))
    lower = gmpy2.f_div(p << w, q)
    upper = gmpy2.c_div(p << w, q)
    return FiniteInterval.from_endpoints(Dyadic(lower, w), Dyadic(upper, w))


def check_closed(expr, bindings: Dict):
    for variable, value in bindings.items():
        if free_variables(value):
            names = ", ".join(sorted(free_variables(value)))
            raise ScopeError(f"The value bound to {variable} has free variables: {names}")
    unbound = free_variables(expr) - set(bindings)
    if unbound:
        raise ScopeError(f"Unbound variables: {', '.join(sorted(unbound))}")


class DagBuilder:
    """Builds one interval name per distinct subterm"""

    def __init__(self, trace: CostTrace, node_cap: Optional[int] = None):
        self.trace = trace
        self.node_cap = node_cap
        self._shared: Dict = {}

    def key(self, expr, env):
        return (expr, tuple((v, id(env[v])) for v in sorted(free_variables(expr))))

    def bind(self, expr, env):
        return self.build(expr, env)

    def lookup(self, binding) -> Name:
        return binding

    def retain(self):
        if self.node_cap is not None and self.trace.live_nodes >= self.node_cap:
            raise NodeCapExceeded(
                f"More than {self.node_cap} nodes built without sharing", trace=self.trace
            )
        self.trace.retain(1)

    def node(self, expr, env, make) -> Name:
        key = self.key(expr, env)
        if key is not None and key in self._shared:
            return self._shared[key]
        phi = make()
        self.retain()
        if key is not None:
            self._shared[key] = phi
        return phi

    def root(self, expr, bindings: Dict) -> Name:
        env = {variable: self.bind(value, {}) for variable, value in bindings.items()}
        return self.build(expr, env)

    def build(self, expr, env) -> Name:
        if isinstance(expr, Number):
            return self.node(expr, env, lambda: literal_name(expr))
        if isinstance(expr, Variable):
            try:
                return self.lookup(env[expr.name])
            except KeyError:
                raise ScopeError(f"Unbound variable {expr.name}")
        if isinstance(expr, Neg):
            return self.node(
                expr,
                env,
                lambda: pointwise(ineg, self.build(expr.operand, env), note=to_text(expr)),
            )
        if isinstance(expr, BinOp):
            return self.node(
                expr,
                env,
                lambda: pointwise(
                    INTERVAL_OPERATIONS[expr.op],
                    self.build(expr.left, env),
                    self.build(expr.right, env),
                    note=to_text(expr),
                ),
            )
        if isinstance(expr, Apply) and isinstance(expr.function, Lambda):
            argument = self.bind(expr.argument, env)
            return self.build(expr.function.body, {**env, expr.function.parameter: argument})
        if isinstance(expr, Apply):
            return self.node(
                expr, env, lambda: self.apply_named(expr.function, expr.argument, env)
            )
        if isinstance(expr, Iterate):
            current = self.bind(expr.seed, env)
            for _ in range(expr.count):
                current = self.bind(expr.function.body, {**env, expr.function.parameter: current})
            return self.lookup(current)
        raise TypeError(f"{expr!r} is not an expression")

    def apply_named(self, label, argument, env) -> Name:
        phi = self.build(argument, env)
        if label == SQRT:
            return real_sqrt(phi)
        return evaluate(interval_function(label), phi)


class _Deferred:
    __slots__ = ("expr", "env")

    def __init__(self, expr, env):
        self.expr = expr
        self.env = env


class TreeBuilder(DagBuilder):
    """Rebuilds the bound subterm at every occurrence of a variable"""

    def __init__(self, trace: CostTrace, node_cap: Optional[int] = None):
        if node_cap is None:
            node_cap = app_settings.Tree.node_cap
        super().__init__(trace, node_cap=node_cap)

    def key(self, expr, env):
        return None

    def bind(self, expr, env):
        return _Deferred(expr, env)

    def lookup(self, binding) -> Name:
        return self.build(binding.expr, binding.env)


def narrow(root: Name, n: int, trace: CostTrace, fuel: Optional[int] = None) -> DyadicInterval:
    """Queries the root at n plus the guard bits and upwards until diam <= 2^(-n)

    Every node of the DAG is asked at the same index k as the root. Nodes do not get
    indices of their own; each pointwise node rounds at its own working precision for k, and
    the loop raises k for all of them together when the root is still too wide.
    """
    budget = Fuel(fuel, purpose=f"narrowing {root.note} to 2^(-{n})")
    k = n + app_settings.Dag.guard_bits
    while True:
        budget.spend()
        with trace.query(k, encoded_length(k), query_cost(k)) as record:
            J = root(k)
            record.answer_size = encoded_length(J)
        if within_precision(J, n):
            logger.debug(f"{root.note} is {J} at index {k}")
            return J
        k += 1


class RestartRun:
    """One pass of interval arithmetic with every result rounded outward to w bits"""

    def __init__(self, w: int, trace: CostTrace):
        self.w = w
        self.trace = trace
        self._functions: Dict[str, Name] = {}

    def held(self, value: DyadicInterval, released: int = 0) -> DyadicInterval:
        self.trace.retain(1)
        self.trace.release(released)
        return value

    def function(self, label) -> Name:
        if label not in self._functions:
            self._functions[label] = interval_function(label)
        return self._functions[label]

    def value(self, expr, env) -> DyadicInterval:
        """The caller owns one live value on the trace for every call"""
        if isinstance(expr, Number):
            return self.held(literal_enclosure(expr, self.w))
        if isinstance(expr, Variable):
            try:
                return self.held(env[expr.name])
            except KeyError:
                raise ScopeError(f"Unbound variable {expr.name}")
        if isinstance(expr, Neg):
            return self.held(ineg(self.value(expr.operand, env)), released=1)
        if isinstance(expr, BinOp):
            operation = INTERVAL_OPERATIONS[expr.op]
            a, b = self.value(expr.left, env), self.value(expr.right, env)
            return self.held(outward_round(operation(a, b), self.w), released=2)
        if isinstance(expr, Apply) and isinstance(expr.function, Lambda):
            argument = self.value(expr.argument, env)
            result = self.value(expr.function.body, {**env, expr.function.parameter: argument})
            self.trace.release(1)
            return result
        if isinstance(expr, Apply):
            argument = self.value(expr.argument, env)
            if expr.function == SQRT:
                result = isqrt(argument, self.w)
            else:
                result = outward_round(self.function(expr.function)(argument), self.w)
            return self.held(result, released=1)
        if isinstance(expr, Iterate):
            current = self.value(expr.seed, env)
            for _ in range(expr.count):
                env_i = {**env, expr.function.parameter: current}
                current = self.value(expr.function.body, env_i)
                self.trace.release(1)
            return current
        raise TypeError(f"{expr!r} is not an expression")

    def run(self, expr, bindings: Dict) -> DyadicInterval:
        env = {variable: self.value(value, {}) for variable, value in bindings.items()}
        result = self.value(expr, env)
        self.trace.release(len(env) + 1)
        return result


def restart(
    expr, bindings: Dict, n: int, trace: CostTrace, cap: Optional[int] = None
) -> DyadicInterval:
    if cap is None:
        cap = app_settings.Restart.cap
    budget = Fuel(cap + 1, purpose=f"restarting {to_text(expr)} for 2^(-{n})")
    w = max(n, 1)
    while True:
        budget.spend()
        with trace.query(w, encoded_length(w), query_cost(w)) as record:
            J = RestartRun(w, trace).run(expr, bindings)
            record.answer_size = encoded_length(J)
        if within_precision(J, n):
            return J
        logger.debug(f"Working precision {w} gave {J}, restarting")
        w *= 2


def eval_expr(
    expr,
    n: int,
    strategy: str = STRATEGIES.dag,
    bindings: Optional[Dict] = None,
    fuel: Optional[int] = None,
) -> Tuple[DyadicInterval, CostTrace]:
    """An enclosure of the value of expr with diam <= 2^(-n), and what it cost"""
    bindings = dict(bindings or {})
    check_closed(expr, bindings)
    trace = CostTrace(label=f"{strategy} {to_text(expr)}")

    if strategy == STRATEGIES.restart:
        return restart(expr, bindings, n, trace), trace

    if strategy == STRATEGIES.dag:
        builder = DagBuilder(trace)
    elif strategy == STRATEGIES.tree:
        builder = TreeBuilder(trace)
    else:
        raise ValueError(f"Unknown strategy {strategy!r}")

    root = builder.root(expr, bindings)
    logger.debug(f"{strategy} built {trace.live_nodes} nodes for {to_text(expr)}")
    return narrow(root, n, trace, fuel=fuel), trace


__all__ = [
    "literal_name",
    "literal_enclosure",
    "check_closed",
    "DagBuilder",
    "TreeBuilder",
    "narrow",
    "RestartRun",
    "restart",
    "eval_expr",
]
