"""Named presentations of the algebras the workbench computes in."""
