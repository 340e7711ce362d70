import random

import pytest
from hypothesis import given, settings, strategies as st

from seqforge import tag_system as ts
from seqforge.exceptions import DeadWordError
from seqforge.tag_system import TagBudget, TagRules, TagStatus, TagWord

SIGMA_WORDS = [4, 15, 10, 25, 412, 47, 2128, 853, 372, 2805, 366, 2603, 704, 37913, 612, 127,
               998, 2401, 1200, 623]
SIGMA_CYCLES = [2, 6, 6, 6, 1, 10, 28, 6, 10, 6, 6, 6, 1, 1, 6, 28, 10, 6, 10, 6]

# Most distinct words reached from a binary word of length n, by brute force
LONGEST_BY_LENGTH = [4, 7, 6, 7, 22, 23, 24, 25, 30, 31]


def test_single_step():
    assert ts.step('1000') == TagWord('01101')
    assert ts.step(TagWord('0')) == TagWord('')
    assert str(ts.step('0')) == 'ε'
    with pytest.raises(DeadWordError):
        ts.step('')


def test_rules_validation():
    with pytest.raises(ValueError):
        TagRules(2, 0, ('00', '1101'))
    with pytest.raises(ValueError):
        TagRules(2, 3, ('00',))
    with pytest.raises(ValueError):
        TagRules(2, 3, ('02', '1'))
    rules = ts.post_rules()
    assert rules.pass_safe
    assert rules.appendant('1') == '1101'
    assert not TagRules(2, 3, ('0', '1101')).pass_safe
    assert rules.fingerprint != TagRules(2, 2, ('0', '11')).fingerprint
    assert rules.fingerprint == ts.post_rules().fingerprint


def test_sigma_two_cycles():
    outcome = ts.trajectory(ts.sigma(2))
    assert outcome.status is TagStatus.CYCLES
    assert (outcome.words_before_cycle_or_death, outcome.cycle_len) == (15, 6)
    assert outcome.distinct_words == 21
    assert str(outcome) == 'cycles, 15 words before a cycle of length 6'


def test_word_that_dies():
    outcome = ts.trajectory('1000')
    assert outcome.status is TagStatus.DIES
    assert outcome.words_before_cycle_or_death == 7
    assert outcome.steps == 6
    assert outcome.max_length_seen == 5
    assert str(outcome) == 'dies, 7 words'
    assert ts.accelerated_trajectory('1000') == outcome


def test_empty_word():
    assert ts.accelerated_trajectory('').status is TagStatus.DIES
    assert ts.trajectory('').words_before_cycle_or_death == 1


def test_pass_matches_single_steps():
    stepper = ts.PassStepper(ts.post_rules())
    nxt, k, peak = stepper.run_pass('100100')
    assert k == 2
    assert nxt == ts.step(ts.step('100100')).symbols == '11011101'
    assert peak == 8


@given(st.text(alphabet='01', min_size=1, max_size=64),
       st.integers(min_value=1, max_value=3000),
       st.integers(min_value=5, max_value=300))
@settings(max_examples=150, deadline=None)
def test_accelerated_agrees_with_plain(word, max_steps, max_word_len):
    budget = TagBudget(max_steps, max_word_len)
    assert ts.accelerated_trajectory(word, budget=budget) == ts.trajectory(word, budget=budget)


def test_short_appendants_fall_back_to_plain():
    rules = TagRules(2, 3, ('0', '1101'))
    assert ts.accelerated_trajectory('110100', rules) == ts.trajectory('110100', rules)


def test_step_budget():
    outcome = ts.trajectory(ts.sigma(14), budget=TagBudget(max_steps=1000))
    assert outcome.status is TagStatus.UNRESOLVED
    assert outcome.steps == 1000
    assert ts.accelerated_trajectory(ts.sigma(14), budget=TagBudget(max_steps=1000)) == outcome
    assert 'unresolved after 1000 steps' in str(outcome)


def test_cycle_longer_than_budget_is_unresolved():
    # sigma_2 enters its cycle after 15 steps and the cycle has length 6
    assert ts.trajectory(ts.sigma(2), budget=TagBudget(max_steps=21)).status is TagStatus.CYCLES
    assert ts.trajectory(ts.sigma(2), budget=TagBudget(max_steps=20)).status is TagStatus.UNRESOLVED


def test_word_length_budget():
    outcome = ts.accelerated_trajectory(ts.sigma(14), budget=TagBudget(max_word_len=50))
    assert outcome.status is TagStatus.UNRESOLVED
    assert outcome.max_length_seen == 51


def test_sigma_rows():
    rows = ts.classify_sigma_range(20)
    assert [r.words for r in rows] == SIGMA_WORDS
    assert [r.cycle_len for r in rows] == SIGMA_CYCLES
    assert [r.n for r in rows if r.status is TagStatus.DIES] == [5, 13, 14]


def test_sigma_rows_plain_and_threaded():
    plain = ts.classify_sigma_range(8, accelerated=False)
    threaded = ts.classify_sigma_range(8, threads=3)
    assert plain == threaded
    assert [r.words for r in plain] == SIGMA_WORDS[:8]


def test_sigma_five():
    outcome = ts.accelerated_trajectory(ts.sigma(5))
    assert outcome.status is TagStatus.DIES
    assert outcome.steps == 411
    with pytest.raises(ValueError):
        ts.sigma(0)


@pytest.mark.slow
def test_sigma_up_to_sixty():
    rows = ts.classify_sigma_range(60, budget=TagBudget(max_steps=2 * 10 ** 7),
                                   threads=4)
    assert all(r.status is not TagStatus.UNRESOLVED for r in rows)
    assert [r.n for r in rows if r.status is TagStatus.DIES] == [5, 13, 14, 22, 25, 46, 47, 54]


@pytest.mark.slow
def test_sigma_up_to_sixty_both_steppers():
    budget = TagBudget(max_steps=2 * 10 ** 7)
    accelerated = ts.classify_sigma_range(60, budget=budget, threads=4)
    plain = ts.classify_sigma_range(60, budget=budget, threads=4, accelerated=False)
    assert plain == accelerated


@pytest.mark.slow
def test_accelerated_agrees_with_plain_in_bulk():
    rng = random.Random(64)
    budget = TagBudget(max_steps=20000)
    for _ in range(10 ** 4):
        word = ''.join(rng.choice('01') for _ in range(rng.randint(1, 64)))
        assert ts.accelerated_trajectory(word, budget=budget) == ts.trajectory(word, budget=budget), word


def test_longest_trajectories_by_length():
    assert [ts.max_words_over_length(n) for n in range(1, 11)] == LONGEST_BY_LENGTH
    with pytest.raises(ValueError):
        ts.max_words_over_length(23)


def test_word_packing():
    for symbols in ('', '0', '1', '0010', '100100100', '0' * 17):
        word = TagWord(symbols)
        assert TagWord.unpack(word.pack(), len(word)) == word
    assert TagWord('0120').pack() == b'0120'
    assert TagWord.unpack(b'0120', 4, binary=False) == TagWord('0120')


def test_run_reaches_same_end_in_pieces():
    whole = ts.TagRun(ts.post_rules(), ts.sigma(14).symbols).advance(10 ** 6)
    assert whole.status is TagStatus.DIES
    assert whole.steps == 37912

    pieces = ts.TagRun(ts.post_rules(), ts.sigma(14).symbols)
    boundaries = []
    for limit in (100, 5000, 20000, 10 ** 6):
        pieces.advance(limit, on_boundary=lambda run: boundaries.append(run.steps))
    assert (pieces.status, pieces.steps, pieces.longest) == (whole.status, whole.steps, whole.longest)
    assert boundaries == sorted(boundaries)


def test_run_detects_cycle():
    run = ts.TagRun(ts.post_rules(), ts.sigma(2).symbols).advance(10 ** 4)
    assert run.finished
    assert run.status is TagStatus.CYCLES


@given(st.text(alphabet='01', min_size=1, max_size=40))
def test_step_changes_length_by_appendant_minus_deletion(word):
    rules = ts.post_rules()
    nxt = ts.step(word, rules)
    assert len(nxt) == max(0, len(word) + len(rules.appendant(word[0])) - rules.deletion)
