import sys

from pylint.lint import Run

if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "pyknotslopes"
    rcfile = sys.argv[2] if len(sys.argv) > 2 else ".pylintrc"
    threshold = float(sys.argv[3]) if len(sys.argv) > 3 else 9.0

    result = Run([target, f"--rcfile={rcfile}"], exit=False)
    exitCode = result.linter.msg_status
    rating = result.linter.stats.global_note

    if exitCode & 3 or rating < threshold:
        sys.exit(exitCode or 1)
