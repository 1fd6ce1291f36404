from django.test import SimpleTestCase

from paramreals.apps.core.choices import STRATEGIES
from paramreals.apps.core.costs import CostTrace
from paramreals.apps.core.dyadic import ONE, Dyadic
from paramreals.apps.core.exceptions import (
    DomainError,
    FuelExhausted,
    NodeCapExceeded,
    ScopeError,
)
from paramreals.apps.core.intervals import contains, intersect, within_precision

from ..app_settings import app_settings
from ..corpus import expression_corpus, logistic_bindings, logistic_program
from ..factories import LogisticMapFactory
from ..nodes import Number, expression_size
from ..oracles import exact_value
from ..parser import parse
from ..strategies import TreeBuilder, eval_expr, restart

EXACT = (STRATEGIES.dag, STRATEGIES.restart)


class EvaluationTestCase(SimpleTestCase):
    def test_half_times_two(self):
        for strategy in STRATEGIES:
            strategy = strategy[0]
            with self.subTest(strategy):
                J, _ = eval_expr(parse("1/2 * 2"), 10, strategy)
                self.assertTrue(contains(J, ONE))
                self.assertTrue(within_precision(J, 10))

    def test_named_functions(self):
        for text, value in (("apply(logistic, 1/2)", ONE), ("apply(flip, 1/4)", Dyadic(3, 2))):
            for strategy in EXACT:
                with self.subTest(text, strategy=strategy):
                    J, _ = eval_expr(parse(text), 20, strategy)
                    self.assertTrue(contains(J, value))

    def test_iterating_zero_times_gives_the_seed(self):
        for strategy in EXACT:
            J, _ = eval_expr(parse("iterate(x -> x*x, 0, 1/4)"), 12, strategy)
            self.assertTrue(contains(J, Dyadic(1, 2)))

    def test_division_by_zero(self):
        for strategy in EXACT:
            with self.subTest(strategy):
                with self.assertRaises(DomainError):
                    eval_expr(parse("1/0 + 1"), 4, strategy)

    def test_square_root_of_a_negative_number(self):
        for strategy in EXACT:
            with self.subTest(strategy):
                with self.assertRaises(DomainError):
                    eval_expr(parse("apply(sqrt, -1)"), 4, strategy)

    def test_expressions_must_be_closed(self):
        with self.assertRaises(ScopeError):
            eval_expr(parse("x + 1"), 4)
        with self.assertRaises(ScopeError):
            eval_expr(parse("x + 1"), 4, bindings={"x": parse("y")})

    def test_unknown_strategy(self):
        with self.assertRaises(ValueError):
            eval_expr(parse("1"), 4, "guess")


class LogisticTestCase(SimpleTestCase):
    ITERATIONS = 20
    PRECISION = 40

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.program = logistic_program(cls.ITERATIONS)
        cls.exact = exact_value(cls.program, logistic_bindings())

    def test_exact_iterate_is_dyadic(self):
        self.assertTrue(self.exact.is_exact)
        denominator = self.exact.lower.denominator
        self.assertEqual(denominator & (denominator - 1), 0)

    def test_dag_contains_the_exact_iterate(self):
        J, trace = eval_expr(
            self.program, self.PRECISION, STRATEGIES.dag, logistic_bindings()
        )
        self.assertTrue(within_precision(J, self.PRECISION))
        self.assertTrue(self.exact.consistent_with(J))
        self.assertLessEqual(trace.peak_live_nodes, 10 * self.ITERATIONS)

    def test_restart_contains_the_exact_iterate(self):
        J, trace = eval_expr(
            self.program, self.PRECISION, STRATEGIES.restart, logistic_bindings()
        )
        self.assertTrue(within_precision(J, self.PRECISION))
        self.assertTrue(self.exact.consistent_with(J))
        self.assertLessEqual(trace.peak_live_nodes, 3 * expression_size(self.program))

    def test_tree_mode_reaches_the_node_cap(self):
        with self.assertRaises(NodeCapExceeded) as context:
            eval_expr(self.program, self.PRECISION, STRATEGIES.tree, logistic_bindings())
        trace = context.exception.trace
        self.assertGreaterEqual(trace.peak_live_nodes, app_settings.Tree.node_cap)
        self.assertEqual(trace.query_count, 0)

    def test_dag_nodes_grow_linearly(self):
        peaks = []
        for iterations in range(1, 9):
            _, trace = eval_expr(
                logistic_program(iterations), 8, STRATEGIES.dag, logistic_bindings()
            )
            peaks.append(trace.peak_live_nodes)
        steps = {later - earlier for earlier, later in zip(peaks, peaks[1:])}
        self.assertEqual(steps, {3})

    def test_tree_nodes_double_per_iteration(self):
        peaks = []
        for iterations in range(1, 7):
            _, trace = eval_expr(
                logistic_program(iterations), 8, STRATEGIES.tree, logistic_bindings()
            )
            peaks.append(trace.peak_live_nodes)
        for earlier, later in zip(peaks, peaks[1:]):
            self.assertGreaterEqual(later, 2 * earlier)

    def test_random_programs(self):
        for program in LogisticMapFactory.build_batch(5):
            exact = exact_value(program, logistic_bindings())
            for strategy in EXACT:
                with self.subTest(program.count, seed=program.seed, strategy=strategy):
                    J, _ = eval_expr(program, 24, strategy, logistic_bindings())
                    self.assertTrue(exact.consistent_with(J))


class SharingTestCase(SimpleTestCase):
    def test_dag_shares_equal_subterms(self):
        expr = parse("1/3 * 1/3 + 1/3 * 1/3")
        _, dag = eval_expr(expr, 8, STRATEGIES.dag)
        _, tree = eval_expr(expr, 8, STRATEGIES.tree)
        self.assertEqual(dag.peak_live_nodes, 3)
        self.assertEqual(tree.peak_live_nodes, 7)

    def test_tree_builder_cap(self):
        trace = CostTrace()
        builder = TreeBuilder(trace, node_cap=4)
        with self.assertRaises(NodeCapExceeded) as context:
            builder.root(logistic_program(3), logistic_bindings())
        self.assertIs(context.exception.trace, trace)
        self.assertEqual(trace.peak_live_nodes, 4)


class RestartTestCase(SimpleTestCase):
    def test_working_precision_doubles(self):
        trace = CostTrace()
        restart(logistic_program(8), logistic_bindings(), 16, trace)
        widths = [record.argument for record in trace.per_query_log]
        self.assertEqual(widths[0], 16)
        self.assertEqual(widths, [16 * 2**j for j in range(len(widths))])
        self.assertGreater(len(widths), 1)

    def test_restart_cap(self):
        with self.assertRaises(FuelExhausted):
            restart(logistic_program(8), logistic_bindings(), 16, CostTrace(), cap=0)

    def test_precision_zero(self):
        J, trace = eval_expr(parse("1/3"), 0, STRATEGIES.restart)
        self.assertTrue(within_precision(J, 0))
        self.assertEqual(trace.per_query_log[0].argument, 1)


class NarrowingTestCase(SimpleTestCase):
    def test_root_indices_climb_from_the_guard_bits(self):
        for n in (0, 8, 20):
            with self.subTest(n=n):
                _, trace = eval_expr(logistic_program(6), n, STRATEGIES.dag, logistic_bindings())
                indices = [record.argument for record in trace.per_query_log]
                first = n + app_settings.Dag.guard_bits
                self.assertEqual(indices, list(range(first, first + len(indices))))


class StrategyAgreementTestCase(SimpleTestCase):
    def test_corpus(self):
        for entry in expression_corpus():
            expr, bindings = entry.expr(), entry.env()
            exact = exact_value(expr, bindings)
            for n in (0, 8, 16, 32, 64):
                with self.subTest(entry.label, n=n):
                    dag, _ = eval_expr(expr, n, STRATEGIES.dag, bindings)
                    restarted, _ = eval_expr(expr, n, STRATEGIES.restart, bindings)
                    self.assertTrue(within_precision(dag, n))
                    self.assertTrue(within_precision(restarted, n))
                    intersect(dag, restarted)
                    self.assertTrue(exact.consistent_with(dag))
                    self.assertTrue(exact.consistent_with(restarted))

    def test_literals_agree(self):
        for number in (Number(1, 3), Number(5, 8), Number(22, 7)):
            exact = exact_value(number)
            for strategy in EXACT:
                with self.subTest(number, strategy=strategy):
                    J, _ = eval_expr(number, 32, strategy)
                    self.assertTrue(exact.consistent_with(J))


__all__ = [
    "EvaluationTestCase",
    "LogisticTestCase",
    "SharingTestCase",
    "RestartTestCase",
    "NarrowingTestCase",
    "StrategyAgreementTestCase",
]
