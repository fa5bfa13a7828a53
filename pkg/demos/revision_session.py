"""Driving a revision session programmatically (what the HTTP API wraps).

Sessions are immutable values with history: apply() and undo() hand back
new sessions, the bundle is recomputed atomically on every step, and the
suggestion always points at the current worst judgment.

Run: python demos/revision_session.py
"""

from coprank import from_upper_triangle, open_session


def status(tag, session):
    bundle = session.bundle
    s = session.suggest()
    print(f"{tag}: D = {bundle.discrepancy.global_value:.3f}, "
          f"saaty = {bundle.saaty:.4f}, "
          f"POP safe = {bundle.cop.pop_safe}, POIP safe = {bundle.cop.poip_safe}, "
          f"history = {len(session.history)}")
    print(f"    suggestion: ({s.position[0]},{s.position[1]}) "
          f"currently {s.current_value:g}, consistent target {s.consistent_target:.2f}")


session = open_session(from_upper_triangle(4, {(1, 2): 2.5, (1, 3): 4, (1, 4): 9.5,
                                               (2, 3): 3, (2, 4): 6.5, (3, 4): 5}))
status("opened", session)

suggestion = session.suggest()
session = session.apply(*suggestion.position, 3.0)
status("after accepting the first suggestion with value 3", session)

suggestion = session.suggest()
session = session.apply(*suggestion.position, 1.5)
status("after the second revision (1.5)", session)

print("\nstep log:")
for step in session.steps:
    print(f"    ({step.i},{step.j}): {step.old_value:g} -> {step.new_value:g}")

session = session.undo()
status("after one undo", session)
session = session.undo()
status("after a second undo (back to the start)", session)
