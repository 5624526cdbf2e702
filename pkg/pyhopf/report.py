"""Verification reports.

Checks never raise when a law fails; they collect violations in a :class:`Report`. Each violation names the law and
the offending index tuple, and may carry extra information such as a normal-form certificate.
"""

from .util import jsonable


class Violation:
    def __init__(self, law, indices=(), **info):
        self.law = law
        self.indices = tuple(indices)
        self.info = info

    def to_dict(self):
        d = {"law": self.law, "indices": list(self.indices)}
        d.update(self.info)
        return d

    def __str__(self):
        idx = ",".join(str(i) for i in self.indices)
        extra = "".join(f" {k}={v}" for k, v in self.info.items())
        return f"{self.law}[{idx}]{extra}"

    def __repr__(self):
        return f"Violation({self})"


class Report:
    """Outcome of a batch of checks.

    :param title: headline for :meth:`summary`.
    :param laws: names of the laws that are checked, so that passing laws show up in the report too.
    """

    def __init__(self, title, laws=()):
        self.title = title
        self.laws = list(laws)
        self.violations = []
        self.details = {}
        self.notes = []

    @property
    def passed(self):
        return not self.violations

    def __bool__(self):
        return self.passed

    def add_violation(self, law, indices=(), **info):
        if law not in self.laws:
            self.laws.append(law)
        self.violations.append(Violation(law, indices, **info))

    def law_passed(self, law):
        return not any(v.law == law for v in self.violations)

    def failing(self, law):
        return [v.indices for v in self.violations if v.law == law]

    def merge(self, other, prefix=None):
        """Copy the laws and violations of ``other`` into this report, optionally prefixing their names."""
        def name(law):
            return f"{prefix}.{law}" if prefix else law
        for law in other.laws:
            if name(law) not in self.laws:
                self.laws.append(name(law))
        for v in other.violations:
            self.violations.append(Violation(name(v.law), v.indices, **v.info))
        for note in other.notes:
            if note not in self.notes:
                self.notes.append(note)
        return self

    def __getitem__(self, item):
        return self.details[item]

    def to_dict(self):
        d = {
            "passed": self.passed,
            "laws": {law: self.law_passed(law) for law in self.laws},
            "violations": [v.to_dict() for v in self.violations],
        }
        d.update(self.details)
        if self.notes:
            d["notes"] = list(self.notes)
        return jsonable(d)

    def summary(self, do_print=True, do_return=False, max_violations=20):
        msg = f"{self.title}\n{'=' * len(self.title)}\n"
        for law in self.laws:
            status = "ok" if self.law_passed(law) else "FAILED"
            msg += f" > {law + ':': <28} {status}\n"
        if self.violations:
            msg += f"\nviolations ({len(self.violations)}):\n"
            for v in self.violations[:max_violations]:
                msg += f" > {v}\n"
            if len(self.violations) > max_violations:
                msg += f" > ... {len(self.violations) - max_violations} more\n"
        for key, value in self.details.items():
            if isinstance(value, (list, dict)):
                continue
            msg += f"{key}: {value}\n"
        for note in self.notes:
            msg += f"note: {note}\n"

        if do_print:
            print(msg)

        if do_return:
            return msg

    def __repr__(self):
        return f"Report({self.title!r}, passed={self.passed}, violations={len(self.violations)})"
