def use_check(suite, name):
    if getattr(suite, 'enabled_checks', None):
        return name in suite.enabled_checks
    else:
        return not name.startswith('_')
